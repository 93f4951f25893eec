#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efdepth {

using Vertex = int;
using VertexSet = std::uint64_t;

/// Hard cap on vertex count: one 64-bit adjacency row per vertex.
inline constexpr int kMaxVertices = 64;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

inline int popcount(VertexSet s) { return std::popcount(s); }

/// Visits every member of a vertex set in increasing order.
template <typename Fn>
inline void for_each_vertex(VertexSet s, Fn&& fn)
{
    while (s) {
        fn(static_cast<Vertex>(std::countr_zero(s)));
        s &= s - 1;
    }
}

/// Finite simple undirected graph on vertices {0..n-1}. Immutable once built;
/// adjacency is one bitset row per vertex.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects self-loops and endpoints
    /// outside {0..n-1}; repeated pairs collapse into one edge.
    static Graph build(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    {
        if (n < 0 || n > kMaxVertices)
            throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxVertices) + "]");
        Graph g;
        g.n_ = n;
        g.rows_.assign(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has an endpoint outside [0, " + std::to_string(n) + ")");
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            g.rows_[u] |= bit(v);
            g.rows_[v] |= bit(u);
        }
        return g;
    }

    /// Builds from adjacency rows; rows must already be symmetric and loop-free.
    static Graph from_rows(std::vector<VertexSet> rows)
    {
        const int n = static_cast<int>(rows.size());
        if (n > kMaxVertices)
            throw GraphError("vertex count " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxVertices));
        for (int v = 0; v < n; ++v) {
            if (rows[v] & bit(v))
                throw GraphError("self-loop at vertex " + std::to_string(v));
            if (n < kMaxVertices && (rows[v] >> n) != 0)
                throw GraphError("row " + std::to_string(v) + " references a vertex >= n");
            for_each_vertex(rows[v], [&](Vertex u) {
                if (!(rows[u] & bit(v)))
                    throw GraphError("asymmetric adjacency between " + std::to_string(v) +
                                     " and " + std::to_string(u));
            });
        }
        Graph g;
        g.n_ = n;
        g.rows_ = std::move(rows);
        return g;
    }

    int order() const { return n_; }

    int size() const
    {
        int twice = 0;
        for (auto r : rows_)
            twice += popcount(r);
        return twice / 2;
    }

    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }

    VertexSet neighbors(Vertex v) const { return rows_[v]; }

    int degree(Vertex v) const { return popcount(rows_[v]); }

    VertexSet all() const { return n_ == kMaxVertices ? ~VertexSet{0} : bit(n_) - 1; }

    const std::vector<VertexSet>& rows() const { return rows_; }

    std::vector<std::pair<Vertex, Vertex>> edges() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n_; ++u)
            for_each_vertex(rows_[u] & ~(bit(u + 1) - 1), [&](Vertex v) { out.emplace_back(u, v); });
        return out;
    }

    std::vector<int> degree_sequence() const
    {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v)
            d[v] = degree(v);
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }

    /// Relabels so that vertex v becomes perm[v].
    Graph permuted(const std::vector<Vertex>& perm) const
    {
        std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
        for (Vertex u = 0; u < n_; ++u)
            for_each_vertex(rows_[u], [&](Vertex v) { rows[perm[u]] |= bit(perm[v]); });
        Graph g;
        g.n_ = n_;
        g.rows_ = std::move(rows);
        return g;
    }

    /// Subgraph induced on the given vertices, renumbered in the given order.
    Graph induced(const std::vector<Vertex>& verts) const
    {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (adjacent(verts[a], verts[b]))
                    e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        return build(static_cast<int>(verts.size()), e);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

// Combinators.

inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    if (a.order() + b.order() > kMaxVertices)
        throw GraphError("disjoint union exceeds " + std::to_string(kMaxVertices) + " vertices");
    std::vector<VertexSet> rows(a.rows());
    const int shift = a.order();
    for (auto r : b.rows())
        rows.push_back(r << shift);
    return Graph::from_rows(std::move(rows));
}

/// m disjoint copies of a; copy c occupies vertices [c*v(a), (c+1)*v(a)).
inline Graph copies(int m, const Graph& a)
{
    if (m < 0)
        throw GraphError("copy multiplier must be nonnegative");
    Graph out;
    for (int c = 0; c < m; ++c)
        out = disjoint_union(out, a);
    return out;
}

inline Graph complement(const Graph& g)
{
    std::vector<VertexSet> rows(g.rows());
    for (Vertex v = 0; v < g.order(); ++v)
        rows[v] = ~rows[v] & g.all() & ~bit(v);
    return Graph::from_rows(std::move(rows));
}

/// Adds one vertex (numbered last) adjacent to every existing vertex.
inline Graph with_apex(const Graph& g)
{
    auto e = g.edges();
    for (Vertex v = 0; v < g.order(); ++v)
        e.emplace_back(v, g.order());
    return Graph::build(g.order() + 1, e);
}

} // namespace efdepth
