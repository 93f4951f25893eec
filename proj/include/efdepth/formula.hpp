#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efdepth {

class FormulaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Op { exists, forall, negation, conjunction, disjunction, implication, adjacent, equal };

/// First-order formula over the signature {~, =}. Conjunctions and disjunctions
/// always have at least two operands; the factories below collapse singletons.
class Formula {
public:
    Op op() const { return op_; }

    /// Bound variable of a quantifier, or the left variable of an atom.
    const std::string& var() const { return lhs_; }
    const std::string& rhs() const { return rhs_; }
    const std::vector<Formula>& operands() const { return kids_; }
    const Formula& body() const { return kids_.front(); }

    bool is_atom() const { return op_ == Op::adjacent || op_ == Op::equal; }
    bool is_quantifier() const { return op_ == Op::exists || op_ == Op::forall; }

    friend bool operator==(const Formula&, const Formula&) = default;

    friend Formula exists(std::string v, Formula body);
    friend Formula forall(std::string v, Formula body);
    friend Formula negate(Formula f);
    friend Formula conjunction(std::vector<Formula> fs);
    friend Formula disjunction(std::vector<Formula> fs);
    friend Formula implies(Formula a, Formula b);
    friend Formula atom_adj(std::string a, std::string b);
    friend Formula atom_eq(std::string a, std::string b);

private:
    Formula(Op op, std::string lhs, std::string rhs, std::vector<Formula> kids)
        : op_(op), lhs_(std::move(lhs)), rhs_(std::move(rhs)), kids_(std::move(kids))
    {
    }

    Op op_ = Op::equal;
    std::string lhs_;
    std::string rhs_;
    std::vector<Formula> kids_;
};

inline Formula exists(std::string v, Formula body) { return {Op::exists, std::move(v), {}, {std::move(body)}}; }

inline Formula forall(std::string v, Formula body) { return {Op::forall, std::move(v), {}, {std::move(body)}}; }

inline Formula negate(Formula f) { return {Op::negation, {}, {}, {std::move(f)}}; }

inline Formula conjunction(std::vector<Formula> fs)
{
    if (fs.empty())
        throw FormulaError("empty conjunction");
    if (fs.size() == 1)
        return std::move(fs.front());
    return {Op::conjunction, {}, {}, std::move(fs)};
}

inline Formula disjunction(std::vector<Formula> fs)
{
    if (fs.empty())
        throw FormulaError("empty disjunction");
    if (fs.size() == 1)
        return std::move(fs.front());
    return {Op::disjunction, {}, {}, std::move(fs)};
}

inline Formula implies(Formula a, Formula b) { return {Op::implication, {}, {}, {std::move(a), std::move(b)}}; }

inline Formula atom_adj(std::string a, std::string b) { return {Op::adjacent, std::move(a), std::move(b), {}}; }

inline Formula atom_eq(std::string a, std::string b) { return {Op::equal, std::move(a), std::move(b), {}}; }

/// x != y and x !~ y, in that order.
inline Formula distinct_nonadjacent(const std::string& a, const std::string& b)
{
    return conjunction({negate(atom_eq(a, b)), negate(atom_adj(a, b))});
}

inline int quantifier_depth(const Formula& f)
{
    int deepest = 0;
    for (const auto& k : f.operands())
        deepest = std::max(deepest, quantifier_depth(k));
    return deepest + (f.is_quantifier() ? 1 : 0);
}

inline std::size_t formula_size(const Formula& f)
{
    std::size_t n = 1;
    for (const auto& k : f.operands())
        n += formula_size(k);
    return n;
}

namespace detail {

inline void check_scope(const Formula& f, std::vector<std::string>& bound)
{
    if (f.is_atom()) {
        for (const auto* v : {&f.var(), &f.rhs()})
            if (std::find(bound.begin(), bound.end(), *v) == bound.end())
                throw FormulaError("unbound variable '" + *v + "'");
        return;
    }
    if (f.is_quantifier()) {
        if (std::find(bound.begin(), bound.end(), f.var()) != bound.end())
            throw FormulaError("quantifier over '" + f.var() + "' shadows an enclosing binding");
        bound.push_back(f.var());
        check_scope(f.body(), bound);
        bound.pop_back();
        return;
    }
    for (const auto& k : f.operands())
        check_scope(k, bound);
}

} // namespace detail

/// Throws unless every atom variable is bound (by a quantifier or by `free`) and
/// no quantifier rebinds an in-scope name.
inline void check_well_scoped(const Formula& f, std::vector<std::string> free = {})
{
    detail::check_scope(f, free);
}

namespace detail {

inline void print_to(const Formula& f, std::string& out);

inline void print_wrapped(const Formula& f, std::string& out)
{
    if (f.is_atom()) {
        print_to(f, out);
        return;
    }
    out += '(';
    print_to(f, out);
    out += ')';
}

inline void print_to(const Formula& f, std::string& out)
{
    switch (f.op()) {
    case Op::adjacent:
        out += f.var() + "~" + f.rhs();
        return;
    case Op::equal:
        out += f.var() + "=" + f.rhs();
        return;
    case Op::exists:
    case Op::forall:
        out += f.op() == Op::exists ? 'E' : 'A';
        out += f.var();
        out += ".(";
        print_to(f.body(), out);
        out += ')';
        return;
    case Op::negation:
        out += '!';
        print_wrapped(f.body(), out);
        return;
    case Op::conjunction:
    case Op::disjunction: {
        const char* sep = f.op() == Op::conjunction ? " & " : " | ";
        bool first = true;
        for (const auto& k : f.operands()) {
            if (!first)
                out += sep;
            first = false;
            print_wrapped(k, out);
        }
        return;
    }
    case Op::implication:
        print_wrapped(f.operands()[0], out);
        out += " -> ";
        print_wrapped(f.operands()[1], out);
        return;
    }
}

} // namespace detail

/// Canonical text: atoms bare, every compound operand parenthesized, quantifier
/// bodies always parenthesized.
inline std::string to_string(const Formula& f)
{
    std::string out;
    detail::print_to(f, out);
    return out;
}

} // namespace efdepth
