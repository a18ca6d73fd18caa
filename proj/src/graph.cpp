#include "tsc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tsc/error.hpp"

namespace tsc {

Graph::Graph(int m, std::vector<Edge> edges)
    : m_(m), edges_(std::move(edges)), neighbours_(static_cast<std::size_t>(m) + 1)
{
    for (const Edge& e : edges_) {
        neighbours_[static_cast<std::size_t>(e.u)].push_back(e.v);
        neighbours_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& adj : neighbours_)
        std::sort(adj.begin(), adj.end());
}

Graph Graph::from_edges(int m, const std::vector<std::pair<int, int>>& pairs)
{
    if (m < 1)
        throw InputError("graph needs at least one vertex, got m = " + std::to_string(m));
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a < 1 || a > m || b < 1 || b > m)
            throw InputError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                             "} has a vertex outside [1," + std::to_string(m) + "]");
        if (a == b)
            throw InputError("loop at vertex " + std::to_string(a));
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InputError("duplicate edge {" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + "}");
    return Graph(m, std::move(edges));
}

int Graph::degree(int v) const
{
    return static_cast<int>(neighbours_.at(static_cast<std::size_t>(v)).size());
}

bool Graph::adjacent(int u, int v) const
{
    if (u < 1 || u > m_ || v < 1 || v > m_)
        return false;
    const auto& adj = neighbours_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

int Graph::component_count() const
{
    std::vector<int> parent(static_cast<std::size_t>(m_) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int components = m_;
    for (const Edge& e : edges_) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

bool Graph::is_connected() const { return component_count() == 1; }

TotalLabeling::TotalLabeling(std::vector<int> vertex_labels, std::vector<int> edge_labels)
    : vertex_labels_(std::move(vertex_labels)), edge_labels_(std::move(edge_labels))
{
    const int n = size();
    inverse_.assign(static_cast<std::size_t>(n) + 1, Node{Node::Kind::Vertex, 0});
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    auto claim = [&](int label, Node node) {
        if (label < 1 || label > n)
            throw InputError("label " + std::to_string(label) + " outside [1," +
                             std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(label)])
            throw InputError("label " + std::to_string(label) + " used twice");
        seen[static_cast<std::size_t>(label)] = true;
        inverse_[static_cast<std::size_t>(label)] = node;
    };
    for (std::size_t i = 0; i < vertex_labels_.size(); ++i)
        claim(vertex_labels_[i], {Node::Kind::Vertex, static_cast<int>(i) + 1});
    for (std::size_t k = 0; k < edge_labels_.size(); ++k)
        claim(edge_labels_[k], {Node::Kind::Edge, static_cast<int>(k) + 1});
}

int TotalLabeling::of(Node node) const
{
    return node.kind == Node::Kind::Vertex ? of_vertex(node.index) : of_edge(node.index);
}

Node TotalLabeling::node_of(int label) const
{
    if (label < 1 || label > size())
        throw InputError("label " + std::to_string(label) + " outside labeling");
    return inverse_[static_cast<std::size_t>(label)];
}

TotalLabeling default_labeling(const Graph& g)
{
    std::vector<int> vl(static_cast<std::size_t>(g.vertex_count()));
    std::iota(vl.begin(), vl.end(), 1);
    std::vector<int> el(g.edge_count());
    std::iota(el.begin(), el.end(), g.vertex_count() + 1);
    return TotalLabeling(std::move(vl), std::move(el));
}

namespace {

// Labels given per edge endpoint pair; re-indexed into canonical edge order.
LabeledGraph assemble(int m, const std::vector<int>& vertex_labels,
                      const std::vector<std::pair<Edge, int>>& labelled_edges)
{
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [e, label] : labelled_edges)
        pairs.emplace_back(e.u, e.v);
    Graph g = Graph::from_edges(m, pairs);
    std::vector<int> edge_labels;
    edge_labels.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        auto it = std::find_if(labelled_edges.begin(), labelled_edges.end(),
                               [&](const auto& le) { return le.first == e; });
        edge_labels.push_back(it->second);
    }
    return {std::move(g), TotalLabeling(vertex_labels, std::move(edge_labels))};
}

} // namespace

LabeledGraph gen_friendship(int n)
{
    if (n < 1)
        throw InputError("friendship graph needs n >= 1, got " + std::to_string(n));
    const int m = 2 * n + 1;
    const int centre = m;
    std::vector<int> vertex_labels(static_cast<std::size_t>(m));
    std::vector<std::pair<Edge, int>> edges;
    for (int k = 1; k <= n; ++k) {
        const int a = 2 * k - 1, b = 2 * k;
        vertex_labels[static_cast<std::size_t>(a - 1)] = 3 * k - 2;
        vertex_labels[static_cast<std::size_t>(b - 1)] = 3 * k;
        edges.push_back({{a, b}, 3 * k - 1});
        edges.push_back({{a, centre}, 3 * n + 2 * k - 1});
        edges.push_back({{b, centre}, 3 * n + 2 * k});
    }
    vertex_labels[static_cast<std::size_t>(centre - 1)] = 5 * n + 1;
    return assemble(m, vertex_labels, edges);
}

LabeledGraph gen_c42()
{
    // a=1 b=2 c=3 d=4 e=5
    return assemble(5, {1, 3, 5, 7, 10},
                    {{{1, 2}, 2}, {{2, 3}, 4}, {{3, 4}, 6}, {{1, 4}, 8}, {{1, 5}, 9}, {{3, 5}, 11}});
}

Graph total_graph(const Graph& g, const TotalLabeling& labels)
{
    if (labels.vertex_count() != g.vertex_count() ||
        labels.edge_count() != static_cast<int>(g.edge_count()))
        throw InputError("labeling does not match graph: expected " +
                         std::to_string(g.vertex_count()) + " vertices and " +
                         std::to_string(g.edge_count()) + " edges");
    std::vector<std::pair<int, int>> pairs;
    const auto& edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        const int el = labels.of_edge(static_cast<int>(k) + 1);
        pairs.emplace_back(labels.of_vertex(e.u), labels.of_vertex(e.v));
        pairs.emplace_back(labels.of_vertex(e.u), el);
        pairs.emplace_back(labels.of_vertex(e.v), el);
        for (std::size_t j = k + 1; j < edges.size(); ++j) {
            const Edge& f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v)
                pairs.emplace_back(el, labels.of_edge(static_cast<int>(j) + 1));
        }
    }
    return Graph::from_edges(labels.size(), pairs);
}

} // namespace tsc
