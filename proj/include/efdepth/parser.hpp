#pragma once

#include "efdepth/formula.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

namespace efdepth {

/// Syntax or scoping error, with a 1-based source position.
class FormulaParseError : public FormulaError {
public:
    FormulaParseError(const std::string& what, int line, int column)
        : FormulaError(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
          column_(column)
    {
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

// formula := 'E' var '.' formula | 'A' var '.' formula | disj ('->' formula)?
// disj    := conj ('|' conj)*
// conj    := lit ('&' lit)*
// lit     := '!' lit | '(' formula ')' | atom
// atom    := var ('~' | '=' | '!~' | '!=') var
class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    Formula parse_sentence()
    {
        Formula f = formula();
        skip();
        if (pos_ < text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "' after formula");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw FormulaParseError(what, line, col);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(std::string_view tok)
    {
        skip();
        return text_.substr(pos_, tok.size()) == tok;
    }

    bool accept(std::string_view tok)
    {
        if (!peek(tok))
            return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok))
            fail("expected '" + std::string(tok) + "'");
    }

    std::string bound_variable()
    {
        skip();
        const std::size_t at = pos_;
        auto v = variable();
        if (std::find(bound_.begin(), bound_.end(), v) == bound_.end()) {
            pos_ = at;
            fail("unbound variable '" + v + "'");
        }
        return v;
    }

    std::string variable()
    {
        skip();
        if (pos_ >= text_.size() || !(text_[pos_] >= 'a' && text_[pos_] <= 'z'))
            fail("expected a variable");
        const std::size_t start = pos_++;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Formula formula()
    {
        skip();
        const bool is_exists = accept("E");
        if (is_exists || accept("A")) {
            const std::size_t at = pos_;
            auto v = variable();
            if (std::find(bound_.begin(), bound_.end(), v) != bound_.end()) {
                pos_ = at;
                skip();
                fail("quantifier over '" + v + "' shadows an enclosing binding");
            }
            expect(".");
            bound_.push_back(v);
            Formula body = formula();
            bound_.pop_back();
            return is_exists ? exists(std::move(v), std::move(body)) : forall(std::move(v), std::move(body));
        }
        Formula lhs = disj();
        if (accept("->"))
            return implies(std::move(lhs), formula());
        return lhs;
    }

    Formula disj()
    {
        std::vector<Formula> parts{conj()};
        while (accept("|"))
            parts.push_back(conj());
        return disjunction(std::move(parts));
    }

    Formula conj()
    {
        std::vector<Formula> parts{lit()};
        while (accept("&"))
            parts.push_back(lit());
        return conjunction(std::move(parts));
    }

    Formula lit()
    {
        if (accept("!"))
            return negate(lit());
        if (accept("(")) {
            Formula inner = formula();
            expect(")");
            return inner;
        }
        skip();
        if (pos_ < text_.size() && (text_[pos_] == 'E' || text_[pos_] == 'A'))
            fail("quantifier must be parenthesized here");
        auto a = bound_variable();
        if (accept("~"))
            return atom_adj(std::move(a), bound_variable());
        if (accept("="))
            return atom_eq(std::move(a), bound_variable());
        if (accept("!~"))
            return negate(atom_adj(std::move(a), bound_variable()));
        if (accept("!="))
            return negate(atom_eq(std::move(a), bound_variable()));
        fail("expected '~', '=', '!~' or '!='");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::string> bound_;
};

} // namespace detail

/// Parses a sentence; rejects free variables and shadowing quantifiers.
inline Formula parse_formula(std::string_view text)
{
    return detail::FormulaParser(text).parse_sentence();
}

} // namespace efdepth
