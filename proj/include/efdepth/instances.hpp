#pragma once

#include "efdepth/families.hpp"
#include "efdepth/graph.hpp"
#include "efdepth/induced.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace efdepth {

/// Pattern F with a host G containing it, a host H avoiding it, and the round
/// count r for which Duplicator is claimed to win on (G, H).
struct InstanceBundle {
    std::string name;
    std::vector<int> params;
    Graph pattern;
    Graph left;
    Graph right;
    int rounds = 0;
};

/// Throws unless F is induced in G and absent from H.
inline InstanceBundle make_bundle(std::string name, std::vector<int> params, Graph f, Graph g, Graph h, int r)
{
    if (!contains_induced(g, f))
        throw GraphError(name + ": pattern is not an induced subgraph of the left host");
    if (contains_induced(h, f))
        throw GraphError(name + ": pattern occurs in the right host");
    return {std::move(name), std::move(params), std::move(f), std::move(g), std::move(h), r};
}

/// P4 on vertices 0..3 followed by m disjoint edges (2i+4, 2i+5).
inline Graph p4_plus_matching(int m) { return disjoint_union(path_graph(4), copies(m, path_graph(2))); }

/// Triangle 0,1,2 with pendant 3 at vertex 0 and pendant 4 at vertex 1.
inline Graph triangle_two_pendants()
{
    return Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
}

/// Two cliques/cycles of equal size joined by the matching i ~ size+i.
inline Graph matched_pair(const Graph& a, const Graph& b)
{
    auto e = disjoint_union(a, b).edges();
    for (Vertex i = 0; i < a.order(); ++i)
        e.emplace_back(i, a.order() + i);
    return Graph::build(a.order() + b.order(), e);
}

inline InstanceBundle thm1_2_instance(int m)
{
    if (m < 1)
        throw GraphError("thm1_2 requires m >= 1");
    return make_bundle("thm1_2", {m}, disjoint_union(path_graph(3), empty_graph(m)), p4_plus_matching(m),
                       p4_plus_matching(m - 1), m + 1);
}

/// params: m, k, n_1..n_k (ascending).
inline InstanceBundle thm2_instance(int m, int k, const std::vector<int>& parts)
{
    if (m < 1)
        throw GraphError("thm2 requires m >= 1");
    if (k < 2)
        throw GraphError("thm2 requires k >= 2");
    if (static_cast<int>(parts.size()) != k)
        throw GraphError("thm2 expects exactly k part sizes");
    validate({Family::complete_multipartite, parts});
    if (parts.back() <= 1)
        throw GraphError("thm2 requires the largest part size to exceed 1");
    const int l = m * std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> params{m, k};
    params.insert(params.end(), parts.begin(), parts.end());
    return make_bundle("thm2", params, copies(m, complete_multipartite_graph(parts)),
                       almost_multipartite_graph(l, k, m), almost_multipartite_graph(l - 1, k, m), l - 1);
}

inline InstanceBundle thm3_c5_instance()
{
    return make_bundle("thm3_c5", {}, cycle_graph(5), disjoint_union(cycle_graph(5), cycle_graph(6)),
                       copies(2, cycle_graph(6)), 3);
}

inline InstanceBundle thm3_g41_instance()
{
    auto f = cycle_graph(4).edges();
    f.emplace_back(0, 4);
    return make_bundle("thm3_g41", {}, Graph::build(5, f), sun_graph(4), sun_graph(5), 3);
}

inline InstanceBundle thm3_diamond_instance()
{
    return make_bundle("thm3_diamond", {}, disjoint_union(empty_graph(1), complete_multipartite_graph({1, 1, 2})),
                       copies(2, almost_multipartite_graph(4, 3, 1)), copies(2, almost_multipartite_graph(3, 3, 1)),
                       3);
}

/// Left: apex over two copies of K4 (0..3) matched to C4 (4..7). Right: apex over
/// two triangular prisms.
inline InstanceBundle thm3_g311_instance()
{
    const Graph k4c4 = matched_pair(complete_graph(4), cycle_graph(4));
    const Graph prism = matched_pair(complete_graph(3), complete_graph(3));
    return make_bundle("thm3_g311", {}, triangle_two_pendants(), with_apex(copies(2, k4c4)),
                       with_apex(copies(2, prism)), 3);
}

inline const std::vector<std::string>& instance_names()
{
    static const std::vector<std::string> names{"thm1_2",      "thm2",         "thm3_c5",
                                                "thm3_g41",    "thm3_diamond", "thm3_g311"};
    return names;
}

/// Dispatch by name. thm1_2 takes {m}; thm2 takes {m, k, n_1..n_k}; thm3_* take none.
inline InstanceBundle gen_paper_instance(const std::string& name, const std::vector<int>& params)
{
    auto expect = [&](std::size_t count) {
        if (params.size() != count)
            throw GraphError(name + " expects " + std::to_string(count) + " parameter(s), got " +
                             std::to_string(params.size()));
    };
    if (name == "thm1_2") {
        expect(1);
        return thm1_2_instance(params[0]);
    }
    if (name == "thm2") {
        if (params.size() < 2)
            throw GraphError("thm2 expects m, k, n_1..n_k");
        expect(2 + static_cast<std::size_t>(std::max(params[1], 0)));
        return thm2_instance(params[0], params[1], {params.begin() + 2, params.end()});
    }
    if (name == "thm3_c5") {
        expect(0);
        return thm3_c5_instance();
    }
    if (name == "thm3_g41") {
        expect(0);
        return thm3_g41_instance();
    }
    if (name == "thm3_diamond") {
        expect(0);
        return thm3_diamond_instance();
    }
    if (name == "thm3_g311") {
        expect(0);
        return thm3_g311_instance();
    }
    throw GraphError("unknown instance '" + name + "'");
}

} // namespace efdepth
