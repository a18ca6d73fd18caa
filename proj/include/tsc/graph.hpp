#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace tsc {

/// Undirected edge {u, v} with u < v, vertices numbered from 1.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Finite simple graph on the vertex set [m] = {1, ..., m}.
 *
 * Immutable after construction. Edges are kept in lexicographic order, which
 * fixes the default labeling and everything downstream of it.
 */
class Graph {
public:
    /// Validates and canonicalizes; throws InputError on a loop, a duplicate
    /// edge, or a vertex outside [1, m].
    static Graph from_edges(int m, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return m_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const;
    bool adjacent(int u, int v) const;
    bool is_connected() const;
    int component_count() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(int m, std::vector<Edge> edges);

    int m_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbours_; // index 0 unused
};

/// A vertex or an edge of a graph; the elements a total labeling assigns numbers to.
struct Node {
    enum class Kind { Vertex, Edge };
    Kind kind = Kind::Vertex;
    int index = 0; // vertex number (1-based) or canonical edge position (1-based)

    friend auto operator<=>(const Node&, const Node&) = default;
};

/**
 * Bijection V(G) ∪ E(G) -> {1, ..., N}, N = m + |E(G)|.
 */
class TotalLabeling {
public:
    /// `vertex_labels[i-1]` is the label of vertex i, `edge_labels[k-1]` that of
    /// the k-th canonical edge. Throws InputError unless this is a bijection
    /// onto 1..N.
    TotalLabeling(std::vector<int> vertex_labels, std::vector<int> edge_labels);

    int size() const { return static_cast<int>(vertex_labels_.size() + edge_labels_.size()); }
    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    int edge_count() const { return static_cast<int>(edge_labels_.size()); }

    int of_vertex(int v) const { return vertex_labels_.at(static_cast<std::size_t>(v - 1)); }
    int of_edge(int k) const { return edge_labels_.at(static_cast<std::size_t>(k - 1)); }
    int of(Node node) const;
    Node node_of(int label) const;

    const std::vector<int>& vertex_labels() const { return vertex_labels_; }
    const std::vector<int>& edge_labels() const { return edge_labels_; }

    friend bool operator==(const TotalLabeling&, const TotalLabeling&) = default;

private:
    std::vector<int> vertex_labels_;
    std::vector<int> edge_labels_;
    std::vector<Node> inverse_; // label -> node, index 0 unused
};

struct LabeledGraph {
    Graph graph;
    TotalLabeling labels;

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

/// Vertex i -> i, k-th canonical edge -> m + k.
TotalLabeling default_labeling(const Graph& g);

/**
 * The friendship graph with n triangles glued at a common centre.
 *
 * Vertices of G: triangle k has outer vertices 2k-1 (a_k) and 2k (b_k); the
 * centre is 2n+1. Labels: a_k -> 3k-2, {a_k,b_k} -> 3k-1, b_k -> 3k,
 * {c,a_k} -> 3n+2k-1, {c,b_k} -> 3n+2k, c -> 5n+1.
 */
LabeledGraph gen_friendship(int n);

/// Two 4-cycles a-b-c-d and a-b-c-e sharing the path a-b-c, labeled
/// 1=a 2=ab 3=b 4=bc 5=c 6=cd 7=d 8=da 9=ea 10=e 11=ce.
LabeledGraph gen_c42();

/// T(G) on the labels 1..N: two labels are adjacent iff the underlying
/// elements are adjacent vertices, edges sharing an endpoint, or an incident
/// vertex-edge pair.
Graph total_graph(const Graph& g, const TotalLabeling& labels);

} // namespace tsc
