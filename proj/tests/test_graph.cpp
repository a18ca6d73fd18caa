#include <catch_amalgamated.hpp>

#include "testkit/corpus.hpp"
#include "tsc/error.hpp"
#include "tsc/graph.hpp"

using namespace tsc;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g)
{
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

void require_bijection(const TotalLabeling& l)
{
    std::vector<bool> seen(static_cast<std::size_t>(l.size()) + 1, false);
    for (int v = 1; v <= l.vertex_count(); ++v)
        seen[static_cast<std::size_t>(l.of_vertex(v))] = true;
    for (int k = 1; k <= l.edge_count(); ++k)
        seen[static_cast<std::size_t>(l.of_edge(k))] = true;
    for (int x = 1; x <= l.size(); ++x)
        REQUIRE(seen[static_cast<std::size_t>(x)]);
}

} // namespace

TEST_CASE("graph_from_edge_list canonicalizes", "[graph]")
{
    const Graph k3 = Graph::from_edges(3, {{2, 3}, {1, 2}, {3, 1}});
    CHECK(edge_pairs(k3) == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(Graph::from_edges(2, {{1, 2}}).edge_count() == 1);

    const Graph c42 = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {3, 5}});
    CHECK(c42.edge_count() == 6);
    CHECK(c42.degree(1) == 3);
    CHECK(c42.degree(3) == 3);
    CHECK(c42.is_connected());
}

TEST_CASE("graph_from_edge_list rejects bad input", "[graph]")
{
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), InputError);
}

TEST_CASE("default_labeling numbers edges after vertices", "[graph]")
{
    const Graph k2 = Graph::from_edges(2, {{1, 2}});
    const TotalLabeling l2 = default_labeling(k2);
    CHECK(l2.of_vertex(1) == 1);
    CHECK(l2.of_vertex(2) == 2);
    CHECK(l2.of_edge(1) == 3);

    const TotalLabeling l3 = default_labeling(Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(l3.of_edge(1) == 4); // (1,2)
    CHECK(l3.of_edge(2) == 5); // (1,3)
    CHECK(l3.of_edge(3) == 6); // (2,3)

    const TotalLabeling p3 = default_labeling(Graph::from_edges(3, {{1, 2}, {2, 3}}));
    CHECK(p3.of_edge(1) == 4);
    CHECK(p3.of_edge(2) == 5);
    CHECK(p3.node_of(5) == Node{Node::Kind::Edge, 2});
}

TEST_CASE("labelings must be bijective", "[graph]")
{
    CHECK_THROWS_AS(TotalLabeling({1, 2}, {2}), InputError);
    CHECK_THROWS_AS(TotalLabeling({1, 2}, {4}), InputError);
    CHECK_NOTHROW(TotalLabeling({3, 1}, {2}));
}

TEST_CASE("friendship generator", "[graph][friendship]")
{
    CHECK_THROWS_AS(gen_friendship(0), InputError);

    const auto f1 = gen_friendship(1);
    CHECK(f1.graph.vertex_count() == 3);
    CHECK(f1.graph.edge_count() == 3);
    CHECK(f1.labels.size() == 6);
    // a1 -> 1, outer edge -> 2, b1 -> 3, centre edges -> 4, 5, centre -> 6
    CHECK(f1.labels.of_vertex(1) == 1);
    CHECK(f1.labels.of_vertex(2) == 3);
    CHECK(f1.labels.of_vertex(3) == 6);
    CHECK(f1.labels.of(Node{Node::Kind::Edge, 1}) == 2); // (1,2)
    CHECK(f1.labels.of(Node{Node::Kind::Edge, 2}) == 4); // (1,3)
    CHECK(f1.labels.of(Node{Node::Kind::Edge, 3}) == 5); // (2,3)

    for (int n = 1; n <= 4; ++n) {
        const auto f = gen_friendship(n);
        CHECK(f.graph.vertex_count() == 2 * n + 1);
        CHECK(f.graph.edge_count() == static_cast<std::size_t>(3 * n));
        CHECK(f.labels.size() == 5 * n + 1);
        CHECK(f.graph.degree(2 * n + 1) == 2 * n);
        for (int v = 1; v <= 2 * n; ++v)
            CHECK(f.graph.degree(v) == 2);
        require_bijection(f.labels);
    }
}

TEST_CASE("C42 generator", "[graph][c42]")
{
    const auto g = gen_c42();
    CHECK(g.graph.vertex_count() == 5);
    CHECK(g.graph.edge_count() == 6);
    CHECK(g.labels.size() == 11);
    const auto& edges = g.graph.edges();
    auto label_of = [&](int u, int v) {
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k] == Edge{u, v})
                return g.labels.of_edge(static_cast<int>(k) + 1);
        return -1;
    };
    CHECK(label_of(1, 2) == 2);  // ab
    CHECK(label_of(3, 5) == 11); // ce
    CHECK(label_of(1, 4) == 8);  // da
    require_bijection(g.labels);
}

TEST_CASE("total graph adjacency", "[graph][total]")
{
    const Graph k2 = Graph::from_edges(2, {{1, 2}});
    const Graph tk2 = total_graph(k2, default_labeling(k2));
    CHECK(edge_pairs(tk2) == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

    const Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
    const Graph tk3 = total_graph(k3, default_labeling(k3));
    CHECK(tk3.edge_count() == 12);
    for (int v = 1; v <= 6; ++v)
        CHECK(tk3.degree(v) == 4);
    // Vertex 1 is opposite edge (2,3) = 6, and so on.
    CHECK_FALSE(tk3.adjacent(1, 6));
    CHECK_FALSE(tk3.adjacent(2, 5));
    CHECK_FALSE(tk3.adjacent(3, 4));

    const Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
    const Graph tp3 = total_graph(p3, default_labeling(p3));
    CHECK(edge_pairs(tp3) ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}});

    CHECK_THROWS_AS(total_graph(k3, default_labeling(k2)), InputError);
}

TEST_CASE("total graph edge count identity", "[graph][total][property]")
{
    std::vector<LabeledGraph> graphs = {gen_c42()};
    for (int n = 1; n <= 3; ++n)
        graphs.push_back(gen_friendship(n));
    for (const auto& g : corpus::all_graphs(4))
        graphs.push_back(g);
    for (const auto& lg : graphs) {
        std::size_t expected = 3 * lg.graph.edge_count();
        for (int v = 1; v <= lg.graph.vertex_count(); ++v) {
            const auto d = static_cast<std::size_t>(lg.graph.degree(v));
            expected += d * (d - (d > 0 ? 1 : 0)) / 2;
        }
        CHECK(total_graph(lg.graph, lg.labels).edge_count() == expected);
        require_bijection(lg.labels);
    }
}
