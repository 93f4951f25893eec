#pragma once

#include "efdepth/graph.hpp"
#include "efdepth/induced.hpp"
#include "efdepth/io.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace efdepth {

inline constexpr int kCanonicalMaxVertices = 10;
inline constexpr int kEnumerateMaxVertices = 7;
inline constexpr int kChromaticMaxVertices = 16;

namespace detail {

/// Branch-and-bound over degree-class-respecting labelings, maximizing the
/// upper-triangle bit string in graph6 column order.
class CanonicalLabeler {
public:
    explicit CanonicalLabeler(const Graph& g) : g_(g), n_(g.order())
    {
        std::vector<Vertex> by_degree(static_cast<std::size_t>(n_));
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        for (Vertex v : by_degree)
            slot_degree_.push_back(g.degree(v));
        total_bits_ = n_ * (n_ - 1) / 2;
    }

    /// Returns inverse labeling: position p holds original vertex.
    std::vector<Vertex> run()
    {
        current_.assign(static_cast<std::size_t>(n_), -1);
        best_.clear();
        best_bits_ = 0;
        search(0, 0, 0);
        return best_;
    }

private:
    // `bits` holds the first p*(p-1)/2 bits of the current labeling.
    void search(int p, VertexSet used, std::uint64_t bits)
    {
        if (p == n_) {
            if (best_.empty() || bits > best_bits_) {
                best_ = current_;
                best_bits_ = bits;
            }
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if ((used & bit(v)) || g_.degree(v) != slot_degree_[p])
                continue;
            std::uint64_t col = 0;
            for (int q = 0; q < p; ++q)
                col = (col << 1) | (g_.adjacent(current_[q], v) ? 1U : 0U);
            const std::uint64_t next = (bits << p) | col;
            if (!best_.empty()) {
                const int len = (p + 1) * p / 2;
                if (next < (best_bits_ >> (total_bits_ - len)))
                    continue;
            }
            current_[p] = v;
            search(p + 1, used | bit(v), next);
        }
        current_[p] = -1;
    }

    const Graph& g_;
    int n_;
    int total_bits_ = 0;
    std::vector<int> slot_degree_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
    std::uint64_t best_bits_ = 0;
};

} // namespace detail

/// Canonical form: graph6 bytes of the maximal labeling. Equal for two graphs
/// exactly when they are isomorphic.
inline std::string canonicalize(const Graph& g)
{
    if (g.order() > kCanonicalMaxVertices)
        throw GraphError("canonicalize supports n <= " + std::to_string(kCanonicalMaxVertices) + ", got " +
                         std::to_string(g.order()));
    auto inverse = detail::CanonicalLabeler(g).run();
    std::vector<Vertex> perm(inverse.size());
    for (std::size_t p = 0; p < inverse.size(); ++p)
        perm[inverse[p]] = static_cast<Vertex>(p);
    return to_graph6(g.permuted(perm));
}

inline Graph canonical_graph(const Graph& g) { return from_graph6(canonicalize(g)); }

/// One representative per isomorphism class on exactly n vertices, sorted by
/// canonical form. Built by extending (n-1)-vertex representatives with every
/// neighbourhood of a new vertex.
inline std::vector<Graph> enumerate_up_to_iso(int n)
{
    if (n < 0 || n > kEnumerateMaxVertices)
        throw GraphError("enumeration supports 0 <= n <= " + std::to_string(kEnumerateMaxVertices) +
                         ", got " + std::to_string(n));
    std::set<std::string> level{canonicalize(Graph::build(0, {}))};
    for (int size = 1; size <= n; ++size) {
        std::set<std::string> next;
        for (const auto& code : level) {
            const Graph base = from_graph6(code);
            for (VertexSet nb = 0; nb < bit(size - 1); ++nb) {
                std::vector<VertexSet> rows(base.rows());
                rows.push_back(nb);
                for_each_vertex(nb, [&](Vertex u) { rows[u] |= bit(size - 1); });
                next.insert(canonicalize(Graph::from_rows(std::move(rows))));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& code : level)
        out.push_back(from_graph6(code));
    return out;
}

/// All representatives with 0..n_max vertices, in increasing vertex count.
inline std::vector<Graph> enumerate_up_to(int n_max)
{
    std::vector<Graph> out;
    for (int n = 0; n <= n_max; ++n) {
        auto level = enumerate_up_to_iso(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Orbit partition of the automorphism group, each cell sorted, cells ordered by
/// smallest member. If the search exceeds `node_budget` the discrete partition
/// is returned instead.
inline std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& g,
                                                            std::uint64_t node_budget = 5'000'000)
{
    const int n = g.order();
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    };

    // Cheap vertex invariant: degree and sorted neighbour degrees.
    std::vector<std::vector<int>> invariant(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        auto& inv = invariant[v];
        inv.push_back(g.degree(v));
        std::vector<int> nd;
        for_each_vertex(g.neighbors(v), [&](Vertex u) { nd.push_back(g.degree(u)); });
        std::sort(nd.begin(), nd.end());
        inv.insert(inv.end(), nd.begin(), nd.end());
    }

    std::uint64_t spent = 0;
    bool gave_up = false;
    detail::InducedMatcher matcher(g, g, /*equal_degrees=*/true);
    for (Vertex u = 0; u < n && !gave_up; ++u)
        for (Vertex v = u + 1; v < n && !gave_up; ++v) {
            if (find(u) == find(v) || invariant[u] != invariant[v])
                continue;
            auto aut = matcher.find(std::pair{u, v}, node_budget - spent);
            spent += matcher.nodes_used();
            gave_up = matcher.limit_hit() || spent >= node_budget;
            if (aut)
                for (Vertex w = 0; w < n; ++w)
                    unite(w, (*aut)[w]);
        }

    std::vector<std::vector<Vertex>> cells;
    if (gave_up) {
        for (Vertex v = 0; v < n; ++v)
            cells.push_back({v});
        return cells;
    }
    std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        Vertex r = find(v);
        if (cell_of[r] < 0) {
            cell_of[r] = static_cast<int>(cells.size());
            cells.emplace_back();
        }
        cells[cell_of[r]].push_back(v);
    }
    return cells;
}

namespace detail {

inline bool colourable(const Graph& g, int k, std::vector<int>& colour, const std::vector<Vertex>& order,
                       std::size_t idx)
{
    if (idx == order.size())
        return true;
    const Vertex v = order[idx];
    int max_used = -1;
    for (std::size_t i = 0; i < idx; ++i)
        max_used = std::max(max_used, colour[order[i]]);
    // Symmetry breaking: never open more than one new colour.
    const int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for_each_vertex(g.neighbors(v), [&](Vertex u) {
            if (colour[u] == c)
                ok = false;
        });
        if (!ok)
            continue;
        colour[v] = c;
        if (colourable(g, k, colour, order, idx + 1))
            return true;
        colour[v] = -1;
    }
    return false;
}

} // namespace detail

inline int chromatic_number(const Graph& g)
{
    const int n = g.order();
    if (n > kChromaticMaxVertices)
        throw GraphError("chromatic_number supports n <= " + std::to_string(kChromaticMaxVertices) + ", got " +
                         std::to_string(n));
    if (n == 0)
        return 0;
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colour(static_cast<std::size_t>(n), -1);
        if (detail::colourable(g, k, colour, order, 0))
            return k;
    }
    return n;
}

} // namespace efdepth
