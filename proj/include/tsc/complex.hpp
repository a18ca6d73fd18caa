#pragma once

#include <cstdint>
#include <vector>

namespace tsc {

/// A face as its ascending list of vertex labels.
using Face = std::vector<int>;

/// Face counts by dimension: entry k is the number of k-dimensional faces.
using FVector = std::vector<std::int64_t>;

/**
 * Finite abstract simplicial complex stored as its facet antichain.
 *
 * Facets are sorted vertex lists in lexicographic order; the vertex set is
 * exactly the union of the facets. A complex with no facets is the complex
 * {∅} whose only face is the empty one (dimension -1); it arises as the link
 * of a facet and cannot be built through from_facets.
 */
class SimplicialComplex {
public:
    /// Sorts each set, drops sets contained in another. Throws InputError on an
    /// empty list or an empty set.
    static SimplicialComplex from_facets(std::vector<Face> sets);

    /// The complex {∅}.
    static SimplicialComplex empty_face_only() { return SimplicialComplex(); }

    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<int>& vertices() const { return vertices_; }

    int dimension() const;
    bool is_pure() const;
    bool is_empty_face_only() const { return facets_.empty(); }

    /// True iff `face` (sorted) is a subset of some facet. The empty face is
    /// always contained.
    bool contains(const Face& face) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::vector<Face> facets);

    std::vector<Face> facets_;
    std::vector<int> vertices_;
};

/// Every non-empty face, bucketed by dimension, each bucket in lexicographic
/// order. Empty for {∅}.
std::vector<std::vector<Face>> all_faces(const SimplicialComplex& complex);

FVector f_vector(const SimplicialComplex& complex);

inline int dimension(const SimplicialComplex& complex) { return complex.dimension(); }
inline bool is_pure(const SimplicialComplex& complex) { return complex.is_pure(); }

/// Number of classes of facets under "shares a vertex", closed transitively.
int facet_component_count(const SimplicialComplex& complex);

/// Facets can be chained pairwise through non-empty intersections.
bool is_facet_connected(const SimplicialComplex& complex);

/**
 * link(σ) = { τ ∈ Δ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }.
 *
 * link at ∅ is the complex itself; link at a facet is {∅}. Throws InputError
 * if σ is not a face.
 */
SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma);

/// Sorted, duplicate-free copy of `face`.
Face canonical_face(Face face);

bool is_subset(const Face& small, const Face& big);

} // namespace tsc
