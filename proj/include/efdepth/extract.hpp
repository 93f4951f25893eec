#pragma once

#include "efdepth/formula.hpp"
#include "efdepth/game.hpp"
#include "efdepth/solver.hpp"
#include "efdepth/synth.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace efdepth {

class NoSpoilerWin : public std::runtime_error {
public:
    NoSpoilerWin() : std::runtime_error("Duplicator wins; no distinguishing sentence of this depth exists") {}
};

namespace detail {

/// Formula in variables x1..x_k (k = c.size()) true on G under x_i -> left vertex
/// and false on H under x_i -> right vertex, of depth <= remaining. Spoiler must
/// win from c.
inline Formula separate(GameSolver& solver, Configuration& c, int remaining)
{
    const Graph& g = solver.left();
    const Graph& h = solver.right();
    const auto& p = c.pairs();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (g.adjacent(p[i].first, p[j].first) != h.adjacent(p[i].second, p[j].second)) {
                Formula atom = atom_adj(indexed_var(static_cast<int>(i + 1)), indexed_var(static_cast<int>(j + 1)));
                return g.adjacent(p[i].first, p[j].first) ? atom : negate(atom);
            }

    auto move = solver.winning_spoiler_move(c, remaining);
    if (!move)
        throw std::logic_error("separate() called on a position Spoiler does not win");

    const std::string z = indexed_var(static_cast<int>(c.size() + 1));
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < c.size(); ++i)
        parts.push_back(negate(atom_eq(z, indexed_var(static_cast<int>(i + 1)))));

    const Side reply_side = other(move->side);
    const Graph& reply_graph = reply_side == Side::left ? g : h;
    for_each_vertex(reply_graph.all() & ~c.used(reply_side), [&](Vertex w) {
        if (move->side == Side::left)
            c.push(move->vertex, w);
        else
            c.push(w, move->vertex);
        Formula sub = separate(solver, c, remaining - 1);
        c.pop();
        parts.push_back(move->side == Side::left ? std::move(sub) : negate(std::move(sub)));
    });
    if (parts.empty())
        parts.push_back(atom_eq(z, z));
    Formula witness = exists(z, conjunction(std::move(parts)));
    // A right-side move yields a sentence true on H, so negate it.
    return move->side == Side::left ? witness : negate(std::move(witness));
}

} // namespace detail

/// Sentence of depth <= r true on `left` and false on `right`, read off Spoiler's
/// winning strategy. Throws NoSpoilerWin if Duplicator wins the r-round game.
inline Formula extract_distinguishing(const Graph& left, const Graph& right, int rounds, SolverOptions opts = {})
{
    GameSolver solver(left, right, opts);
    if (solver.solve(rounds) != Player::spoiler)
        throw NoSpoilerWin();
    Configuration c;
    return detail::separate(solver, c, rounds);
}

} // namespace efdepth
