#pragma once

#include <vector>

#include "tsc/complex.hpp"
#include "tsc/graph.hpp"

namespace tsc {

/// Generators of a total simplicial complex.
struct TotalIndexSet {
    std::vector<Face> triples;    ///< label triples inducing a connected subgraph of T(G)
    std::vector<Face> singletons; ///< labels of isolated vertices of G
};

/**
 * A triple of labels is a total index when the subgraph of T(G) it induces is
 * connected, i.e. at least two of its three pairs are adjacent or incident in
 * G. Isolated vertices of G contribute singletons.
 */
TotalIndexSet total_indices(const Graph& g, const TotalLabeling& labels);

/// Δ_T(G): the complex generated by total_indices.
SimplicialComplex build_tsc(const Graph& g, const TotalLabeling& labels);

inline SimplicialComplex build_tsc(const LabeledGraph& lg)
{
    return build_tsc(lg.graph, lg.labels);
}

/**
 * Closed-form facet list of Δ_T(F_{5n+1}) under the gen_friendship labeling,
 * as thirteen index families. "Corresponding values" of two listed sequences
 * are iterated in lockstep; inner k-ranges are expanded fully. Sorted and
 * duplicate-free.
 */
std::vector<Face> friendship_facets_closed_form(int n);

/// The 73 facets of Δ_T(C_{4,2}) as published, in published order.
const std::vector<Face>& c42_published_facets();

/// Complex generated by c42_published_facets().
SimplicialComplex c42_fixture();

} // namespace tsc
