#pragma once

#include "efdepth/formula.hpp"
#include "efdepth/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace efdepth {

inline std::string indexed_var(int i) { return "x" + std::to_string(i); }

namespace detail {

/// Literals of the induced-copy predicate: x_i~x_j for edges, x_i!~x_j and
/// x_i!=x_j for non-edges (i < j). Edges need no distinctness literal since
/// adjacency is irreflexive.
inline void append_pattern_literals(const Graph& f, const std::vector<std::string>& vars, std::vector<Formula>& out)
{
    for (Vertex i = 0; i < f.order(); ++i)
        for (Vertex j = i + 1; j < f.order(); ++j) {
            if (f.adjacent(i, j)) {
                out.push_back(atom_adj(vars[i], vars[j]));
            } else {
                out.push_back(negate(atom_adj(vars[i], vars[j])));
                out.push_back(negate(atom_eq(vars[i], vars[j])));
            }
        }
}

inline void append_distinct_nonadjacent(const std::string& a, const std::string& b, std::vector<Formula>& out)
{
    out.push_back(negate(atom_eq(a, b)));
    out.push_back(negate(atom_adj(a, b)));
}

} // namespace detail

/// Quantifier-free formula true exactly when vars[i] -> vertex i is an isomorphism
/// onto F from the induced subgraph on the assigned vertices. With one vertex it is
/// the tautology x=x.
inline Formula synth_pattern_predicate(const Graph& f, const std::vector<std::string>& vars)
{
    if (static_cast<int>(vars.size()) != f.order())
        throw FormulaError("pattern has " + std::to_string(f.order()) + " vertices but " +
                           std::to_string(vars.size()) + " variables were given");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw FormulaError("duplicate variable '" + vars[i] + "'");
    if (vars.empty())
        throw FormulaError("pattern predicate needs at least one variable");
    std::vector<Formula> lits;
    detail::append_pattern_literals(f, vars, lits);
    if (lits.empty())
        return atom_eq(vars[0], vars[0]);
    return conjunction(std::move(lits));
}

/// Exists x1..x_l of the pattern predicate; depth v(F).
inline Formula synth_trivial(const Graph& f)
{
    if (f.order() == 0)
        throw FormulaError("the empty pattern has no existential description of depth 0");
    std::vector<std::string> vars;
    for (int i = 1; i <= f.order(); ++i)
        vars.push_back(indexed_var(i));
    Formula body = synth_pattern_predicate(f, vars);
    for (int i = f.order(); i >= 1; --i)
        body = exists(indexed_var(i), std::move(body));
    return body;
}

/// Fault injection for mutation testing of the depth-(m+3) formula.
enum class Thm11Mutation { none, drop_p0_nonadjacency };

/// Depth-(v(H)+3) sentence for "contains an induced P3 + K1 + H".
///
/// With m = v(H) and y_1..y_{m+3} the predicate arguments:
///   P0(y) = P_H(y_4..) & AND_{i<=3, j>i} (y_i != y_j & y_i !~ y_j)
///   P1(y) = P_H(y_4..) & y1~y2 & AND_{j>=3} (y1 != y_j & y1 !~ y_j)
///           & AND_{i=2,3; j>i} (y_i != y_j & y_i !~ y_j)
///   P2(y) = P_H(y_4..) & y1~y2 & y2~y3 & y1 != y3 & y1 !~ y3
///           & AND_{i<=3, j>=4} (y_i != y_j & y_i !~ y_j)
/// and the sentence is
///   E x5..x_{m+4} E x1 ( [E x3 E x4 P0(x1,x3,x4,x5..)]
///                      & [E x2 ([E x4 P1(x1,x2,x4,x5..)] & [E x3 P2(x1,x2,x3,x5..)])] ).
inline Formula synth_thm11(const Graph& h, Thm11Mutation mutation = Thm11Mutation::none)
{
    const int m = h.order();
    std::vector<std::string> tail;
    for (int i = 5; i <= m + 4; ++i)
        tail.push_back(indexed_var(i));

    auto args = [&](int a, int b, int c) {
        std::vector<std::string> y{indexed_var(a), indexed_var(b), indexed_var(c)};
        y.insert(y.end(), tail.begin(), tail.end());
        return y; // y[0..2] are y1..y3, y[3..] are y4..y_{m+3}
    };

    auto p_h = [&](const std::vector<std::string>& y, std::vector<Formula>& out) {
        detail::append_pattern_literals(h, {y.begin() + 3, y.end()}, out);
    };

    auto p0 = [&](const std::vector<std::string>& y) {
        std::vector<Formula> lits;
        p_h(y, lits);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < m + 3; ++j) {
                lits.push_back(negate(atom_eq(y[i], y[j])));
                if (!(mutation == Thm11Mutation::drop_p0_nonadjacency && i == 0 && j == 1))
                    lits.push_back(negate(atom_adj(y[i], y[j])));
            }
        return conjunction(std::move(lits));
    };

    auto p1 = [&](const std::vector<std::string>& y) {
        std::vector<Formula> lits;
        p_h(y, lits);
        lits.push_back(atom_adj(y[0], y[1]));
        for (int j = 2; j < m + 3; ++j)
            detail::append_distinct_nonadjacent(y[0], y[j], lits);
        for (int i = 1; i <= 2; ++i)
            for (int j = i + 1; j < m + 3; ++j)
                detail::append_distinct_nonadjacent(y[i], y[j], lits);
        return conjunction(std::move(lits));
    };

    auto p2 = [&](const std::vector<std::string>& y) {
        std::vector<Formula> lits;
        p_h(y, lits);
        lits.push_back(atom_adj(y[0], y[1]));
        lits.push_back(atom_adj(y[1], y[2]));
        lits.push_back(negate(atom_eq(y[0], y[2])));
        lits.push_back(negate(atom_adj(y[0], y[2])));
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < m + 3; ++j)
                detail::append_distinct_nonadjacent(y[i], y[j], lits);
        return conjunction(std::move(lits));
    };

    Formula block0 = exists(indexed_var(3), exists(indexed_var(4), p0(args(1, 3, 4))));
    Formula block1 = exists(indexed_var(4), p1(args(1, 2, 4)));
    Formula block2 = exists(indexed_var(3), p2(args(1, 2, 3)));
    Formula body = conjunction({std::move(block0), exists(indexed_var(2), conjunction({std::move(block1),
                                                                                       std::move(block2)}))});
    body = exists(indexed_var(1), std::move(body));
    for (int i = m + 4; i >= 5; --i)
        body = exists(indexed_var(i), std::move(body));
    return body;
}

/// Rewrites u~v as (!u~v & !u=v): the result holds on G iff the input holds on
/// the complement of G.
inline Formula complement_transform(const Formula& f)
{
    switch (f.op()) {
    case Op::adjacent:
        return conjunction({negate(f), negate(atom_eq(f.var(), f.rhs()))});
    case Op::equal:
        return f;
    case Op::exists: return exists(f.var(), complement_transform(f.body()));
    case Op::forall: return forall(f.var(), complement_transform(f.body()));
    case Op::negation: return negate(complement_transform(f.body()));
    case Op::implication:
        return implies(complement_transform(f.operands()[0]), complement_transform(f.operands()[1]));
    case Op::conjunction:
    case Op::disjunction: {
        std::vector<Formula> kids;
        for (const auto& k : f.operands())
            kids.push_back(complement_transform(k));
        return f.op() == Op::conjunction ? conjunction(std::move(kids)) : disjunction(std::move(kids));
    }
    }
    return f;
}

/// Random sentence of quantifier depth <= max_depth, for property tests.
template <typename Rng>
Formula random_sentence(Rng& rng, int max_depth)
{
    if (max_depth < 1)
        throw FormulaError("random sentences need depth >= 1");
    std::vector<std::string> scope;
    auto pick = [&](int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); };

    auto gen = [&](auto&& self, int depth_left, int size_left) -> Formula {
        const bool can_atom = !scope.empty();
        const bool can_quant = depth_left > 0;
        int choice;
        if (!can_atom)
            choice = 5;
        else if (size_left <= 1)
            choice = pick(2);
        else
            choice = pick(can_quant ? 8 : 5);
        switch (choice) {
        case 0:
        case 1: {
            auto a = scope[pick(static_cast<int>(scope.size()))];
            auto b = scope[pick(static_cast<int>(scope.size()))];
            return choice == 0 ? atom_adj(a, b) : atom_eq(a, b);
        }
        case 2: return negate(self(self, depth_left, size_left - 1));
        case 3:
        case 4: {
            auto l = self(self, depth_left, size_left / 2);
            auto r = self(self, depth_left, size_left / 2);
            return choice == 3 ? conjunction({std::move(l), std::move(r)})
                               : disjunction({std::move(l), std::move(r)});
        }
        default: {
            auto v = "v" + std::to_string(scope.size() + 1);
            scope.push_back(v);
            auto body = self(self, depth_left - 1, size_left - 1);
            scope.pop_back();
            return pick(2) == 0 ? exists(v, std::move(body)) : forall(v, std::move(body));
        }
        }
    };
    return gen(gen, max_depth, 12);
}

} // namespace efdepth
