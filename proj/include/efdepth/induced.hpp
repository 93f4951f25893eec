#pragma once

#include "efdepth/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace efdepth {

namespace detail {

/// Backtracking search for an injective map pattern -> target that preserves
/// adjacency and non-adjacency. With `equal_degrees` set the map must also
/// preserve degrees exactly (used for automorphism search).
class InducedMatcher {
public:
    InducedMatcher(const Graph& pattern, const Graph& target, bool equal_degrees = false)
        : pattern_(pattern), target_(target), equal_degrees_(equal_degrees)
    {
        order_.resize(static_cast<std::size_t>(pattern.order()));
        std::iota(order_.begin(), order_.end(), 0);
        choose_order();
    }

    /// Returns the map (indexed by pattern vertex) or nothing. `fixed` pins
    /// pattern vertex `fixed->first` to target vertex `fixed->second`.
    std::optional<std::vector<Vertex>> find(std::optional<std::pair<Vertex, Vertex>> fixed = {},
                                            std::uint64_t node_limit = UINT64_MAX)
    {
        if (pattern_.order() > target_.order())
            return std::nullopt;
        map_.assign(static_cast<std::size_t>(pattern_.order()), -1);
        nodes_ = 0;
        limit_ = node_limit;
        exhausted_ = false;
        fixed_ = fixed;
        if (fixed) {
            // Move the pinned vertex to the front of the order.
            auto it = std::find(order_.begin(), order_.end(), fixed->first);
            std::rotate(order_.begin(), it, it + 1);
        }
        if (search(0, 0))
            return map_;
        return std::nullopt;
    }

    bool limit_hit() const { return exhausted_; }
    std::uint64_t nodes_used() const { return nodes_; }

private:
    void choose_order()
    {
        // Greedy: next vertex has the most neighbours already placed, ties by degree.
        const int n = pattern_.order();
        std::vector<Vertex> out;
        VertexSet placed = 0;
        for (int step = 0; step < n; ++step) {
            Vertex best = -1;
            int best_conn = -1, best_deg = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (placed & bit(v))
                    continue;
                int conn = popcount(pattern_.neighbors(v) & placed);
                int deg = pattern_.degree(v);
                if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                    best = v;
                    best_conn = conn;
                    best_deg = deg;
                }
            }
            out.push_back(best);
            placed |= bit(best);
        }
        order_ = out;
    }

    bool search(std::size_t depth, VertexSet used)
    {
        if (depth == order_.size())
            return true;
        if (++nodes_ > limit_) {
            exhausted_ = true;
            return false;
        }
        const Vertex p = order_[depth];
        VertexSet cand = target_.all() & ~used;
        for (std::size_t d = 0; d < depth; ++d) {
            const Vertex q = order_[d];
            const VertexSet nq = target_.neighbors(map_[q]);
            cand &= pattern_.adjacent(p, q) ? nq : ~nq;
        }
        if (depth == 0 && fixed_)
            cand &= bit(fixed_->second);
        const int need = pattern_.degree(p);
        bool found = false;
        for_each_vertex(cand, [&](Vertex v) {
            if (found || exhausted_)
                return;
            const int have = target_.degree(v);
            if (equal_degrees_ ? have != need : have < need)
                return;
            map_[p] = v;
            if (search(depth + 1, used | bit(v)))
                found = true;
            else
                map_[p] = -1;
        });
        return found;
    }

    const Graph& pattern_;
    const Graph& target_;
    bool equal_degrees_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::optional<std::pair<Vertex, Vertex>> fixed_;
    std::uint64_t nodes_ = 0;
    std::uint64_t limit_ = UINT64_MAX;
    bool exhausted_ = false;
};

} // namespace detail

struct InducedResult {
    bool found = false;
    /// witness[v] is the host vertex hosting pattern vertex v.
    std::vector<Vertex> witness;

    explicit operator bool() const { return found; }
};

/// Does `host` contain an induced copy of `pattern`?
inline InducedResult contains_induced(const Graph& host, const Graph& pattern)
{
    detail::InducedMatcher m(pattern, host);
    if (auto w = m.find())
        return {true, std::move(*w)};
    return {};
}

inline bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence())
        return false;
    detail::InducedMatcher m(a, b, /*equal_degrees=*/true);
    return m.find().has_value();
}

/// Checks a claimed witness directly: injective, in range, adjacency preserved both ways.
inline bool is_induced_embedding(const Graph& host, const Graph& pattern, const std::vector<Vertex>& map)
{
    if (static_cast<int>(map.size()) != pattern.order())
        return false;
    VertexSet seen = 0;
    for (Vertex v : map) {
        if (v < 0 || v >= host.order() || (seen & bit(v)))
            return false;
        seen |= bit(v);
    }
    for (Vertex a = 0; a < pattern.order(); ++a)
        for (Vertex b = a + 1; b < pattern.order(); ++b)
            if (pattern.adjacent(a, b) != host.adjacent(map[a], map[b]))
                return false;
    return true;
}

} // namespace efdepth
