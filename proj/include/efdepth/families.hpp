#pragma once

#include "efdepth/graph.hpp"

#include <string>
#include <vector>

namespace efdepth {

enum class Family { path, cycle, complete, empty, complete_multipartite, almost_multipartite };

/// A named graph family plus its integer parameters.
///
///  - path / cycle / complete / empty: `params = {l}`
///  - complete_multipartite: `params = {n_1, ..., n_k}`, ascending
///  - almost_multipartite: `params = {l, k, m}` (classes, parts, components)
struct FamilySpec {
    Family family;
    std::vector<int> params;
};

inline std::string family_name(Family f)
{
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::empty: return "empty";
    case Family::complete_multipartite: return "multipartite";
    case Family::almost_multipartite: return "almost";
    }
    return "?";
}

inline Graph path_graph(int l)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v + 1 < l; ++v)
        e.emplace_back(v, v + 1);
    return Graph::build(l, e);
}

inline Graph cycle_graph(int l)
{
    if (l < 3)
        throw GraphError("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v < l; ++v)
        e.emplace_back(v, (v + 1) % l);
    return Graph::build(l, e);
}

inline Graph complete_graph(int l)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < l; ++u)
        for (Vertex v = u + 1; v < l; ++v)
            e.emplace_back(u, v);
    return Graph::build(l, e);
}

inline Graph empty_graph(int l) { return Graph::build(l, {}); }

/// Parts are laid out consecutively in the given order.
inline Graph complete_multipartite_graph(const std::vector<int>& parts)
{
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    const int n = static_cast<int>(part_of.size());
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                e.emplace_back(u, v);
    return Graph::build(n, e);
}

/// Coordinates of a vertex of the almost-multipartite graph: class, part, component
/// (all 0-based).
struct AlmostMultipartiteVertex {
    int cls;
    int part;
    int component;
};

/// Vertex numbering is lexicographic on (component, part, class).
inline Vertex almost_multipartite_index(int l, int k, AlmostMultipartiteVertex t)
{
    return (t.component * k + t.part) * l + t.cls;
}

inline AlmostMultipartiteVertex almost_multipartite_coords(int l, int k, Vertex v)
{
    return {v % l, (v / l) % k, v / (l * k)};
}

/// Vertices (i,j,h) for class i < l, part j < k, component h < m. Two vertices are
/// adjacent iff they share the component with different class and part, or share the
/// class with different components.
inline Graph almost_multipartite_graph(int l, int k, int m)
{
    if (l < 1 || k < 1 || m < 1)
        throw GraphError("almost-multipartite parameters must be >= 1");
    const int n = l * k * m;
    if (n > kMaxVertices)
        throw GraphError("almost-multipartite graph has " + std::to_string(n) + " vertices, limit " +
                         std::to_string(kMaxVertices));
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u) {
        auto a = almost_multipartite_coords(l, k, u);
        for (Vertex v = u + 1; v < n; ++v) {
            auto b = almost_multipartite_coords(l, k, v);
            bool same_component = a.component == b.component;
            if ((same_component && a.cls != b.cls && a.part != b.part) ||
                (a.cls == b.cls && !same_component))
                e.emplace_back(u, v);
        }
    }
    return Graph::build(n, e);
}

/// Cycle 0..n-1 with a pendant vertex n+i hanging off cycle vertex i.
inline Graph sun_graph(int cycle_length)
{
    auto e = cycle_graph(cycle_length).edges();
    for (Vertex v = 0; v < cycle_length; ++v)
        e.emplace_back(v, cycle_length + v);
    return Graph::build(2 * cycle_length, e);
}

inline void validate(const FamilySpec& spec)
{
    const auto& p = spec.params;
    auto fail = [&](const std::string& why) {
        throw GraphError(family_name(spec.family) + ": " + why);
    };
    switch (spec.family) {
    case Family::path:
    case Family::cycle:
    case Family::complete:
    case Family::empty:
        if (p.size() != 1)
            fail("expects exactly one size parameter");
        if (p[0] < (spec.family == Family::empty ? 0 : 1))
            fail("size parameter out of range");
        if (spec.family == Family::cycle && p[0] < 3)
            fail("cycle length must be >= 3");
        break;
    case Family::complete_multipartite:
        if (p.empty())
            fail("expects at least one part size");
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 1)
                fail("part sizes must be >= 1");
            if (i > 0 && p[i] < p[i - 1])
                fail("part sizes must be sorted ascending");
        }
        break;
    case Family::almost_multipartite:
        if (p.size() != 3)
            fail("expects (l, k, m)");
        for (int x : p)
            if (x < 1)
                fail("parameters must be >= 1");
        break;
    }
}

inline Graph generate(const FamilySpec& spec)
{
    validate(spec);
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::path: return path_graph(p[0]);
    case Family::cycle: return cycle_graph(p[0]);
    case Family::complete: return complete_graph(p[0]);
    case Family::empty: return empty_graph(p[0]);
    case Family::complete_multipartite: return complete_multipartite_graph(p);
    case Family::almost_multipartite: return almost_multipartite_graph(p[0], p[1], p[2]);
    }
    throw GraphError("unknown family");
}

inline Family parse_family(const std::string& name)
{
    for (auto f : {Family::path, Family::cycle, Family::complete, Family::empty,
                   Family::complete_multipartite, Family::almost_multipartite})
        if (family_name(f) == name)
            return f;
    throw GraphError("unknown family '" + name + "'");
}

} // namespace efdepth
