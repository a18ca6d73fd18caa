#include "testkit/corpus.hpp"

#include "tsc/total_complex.hpp"

namespace tsc::corpus {

namespace {

LabeledGraph plain(int m, const std::vector<std::pair<int, int>>& edges)
{
    Graph g = Graph::from_edges(m, edges);
    return {g, default_labeling(g)};
}

} // namespace

std::vector<NamedComplex> named_complexes()
{
    std::vector<NamedComplex> out;
    auto add_graph = [&](std::string name, const LabeledGraph& g) {
        out.push_back({std::move(name), build_tsc(g)});
    };
    add_graph("tsc(K1)", plain(1, {}));
    add_graph("tsc(K2)", plain(2, {{1, 2}}));
    add_graph("tsc(K3)", plain(3, {{1, 2}, {2, 3}, {1, 3}}));
    add_graph("tsc(P3)", plain(3, {{1, 2}, {2, 3}}));
    add_graph("tsc(K2+K2)", plain(4, {{1, 2}, {3, 4}}));
    add_graph("tsc(C4)", plain(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    add_graph("tsc(C42)", gen_c42());
    for (int n = 1; n <= 3; ++n)
        add_graph("tsc(F" + std::to_string(5 * n + 1) + ")", gen_friendship(n));
    out.push_back({"c42 fixture", c42_fixture()});

    auto add = [&](std::string name, std::vector<Face> facets) {
        out.push_back({std::move(name), SimplicialComplex::from_facets(std::move(facets))});
    };
    add("point", {{1}});
    add("simplex3", {{1, 2, 3}});
    add("simplex5", {{1, 2, 3, 4, 5}});
    add("hollow triangle", {{1, 2}, {2, 3}, {1, 3}});
    add("two points", {{1}, {2}});
    add("point+edge", {{1}, {2, 3}});
    add("bowtie", {{1, 2, 3}, {3, 4, 5}});
    add("octahedron boundary", {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5},
                                {2, 3, 6}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
    // 6-vertex triangulation of RP^2; torsion only in characteristic 2.
    add("rp2", {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {2, 4, 6}, {3, 5, 6}});
    return out;
}

std::vector<LabeledGraph> all_graphs(int max_m)
{
    std::vector<LabeledGraph> out;
    for (int m = 1; m <= max_m; ++m) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 1; u <= m; ++u)
            for (int v = u + 1; v <= m; ++v)
                slots.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1U)
                    edges.push_back(slots[i]);
            out.push_back(plain(m, edges));
        }
    }
    return out;
}

} // namespace tsc::corpus
