#pragma once

#include "efdepth/canonical.hpp"
#include "efdepth/certificate.hpp"
#include "efdepth/induced.hpp"
#include "efdepth/solver.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace efdepth {

struct SearchResult {
    std::optional<BoundCertificate> certificate;
    bool budget_exhausted = false;
    std::uint64_t pairs_solved = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Pairs whose value is forced without search. If the smaller graph has a < r
/// vertices and the other more, Spoiler plays a+1 vertices of the larger one. If
/// both have a <= r vertices, the game runs to exhaustion and needs an
/// isomorphism, which cannot exist when only one side contains F.
inline bool spoiler_wins_by_size(int g_order, int h_order, int rounds)
{
    if (g_order != h_order)
        return std::min(g_order, h_order) < rounds;
    return g_order <= rounds;
}

} // namespace detail

/// Looks for (G, H, r) certifying D[F] >= r+1. Candidates, in order: every F-free
/// representative H with at most n_max vertices against every representative G
/// containing F (both by size, then canonical form); then the composites
/// (H + F, H). `budget` caps the solver nodes spent over the whole search.
inline SearchResult search_pair(const Graph& f, int rounds, int n_max, std::uint64_t budget)
{
    SearchResult out;
    const std::vector<Graph> reps = enumerate_up_to(n_max);
    std::vector<const Graph*> free_hosts;
    std::vector<const Graph*> hosts;
    for (const Graph& g : reps)
        (contains_induced(g, f) ? hosts : free_hosts).push_back(&g);

    auto attempt = [&](const Graph& g, const Graph& h) -> bool {
        if (detail::spoiler_wins_by_size(g.order(), h.order(), rounds))
            return false;
        SolverOptions opts;
        opts.node_budget = budget - out.nodes;
        GameSolver solver(g, h, opts);
        try {
            const Player w = solver.solve(rounds);
            out.nodes += solver.nodes();
            ++out.pairs_solved;
            if (w != Player::duplicator)
                return false;
        } catch (const BudgetExceeded&) {
            out.nodes = budget;
            out.budget_exhausted = true;
            return false;
        }
        LowerResult r = certify_lower(f, g, h, rounds);
        out.certificate = r.certificate;
        return true;
    };

    for (const Graph* h : free_hosts)
        for (const Graph* g : hosts) {
            if (attempt(*g, *h))
                return out;
            if (out.budget_exhausted)
                return out;
        }
    for (const Graph* h : free_hosts) {
        if (h->order() + f.order() > kMaxVertices)
            continue;
        if (attempt(disjoint_union(*h, f), *h))
            return out;
        if (out.budget_exhausted)
            return out;
    }
    return out;
}

} // namespace efdepth
