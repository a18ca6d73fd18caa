#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsc/complex.hpp"

namespace tsc {

/// All minimal vertex covers (transversals of the facets) of a complex.
struct CoverReport {
    std::vector<Face> covers;      ///< lexicographic order
    std::vector<int> cardinalities; ///< sizes of `covers`, ascending
    bool unmixed = true;
};

/// The prime (x_i : i in variables) of the facet ideal.
struct PrimeComponent {
    Face variables;

    friend auto operator<=>(const PrimeComponent&, const PrimeComponent&) = default;
};

/**
 * Depth-first search branching on the lexicographically first unhit facet.
 * Siblings exclude the vertices tried before them, and a branch is dropped as
 * soon as a chosen vertex has no private facet left; survivors pass a final
 * pairwise-containment filter.
 */
CoverReport minimal_vertex_covers(const SimplicialComplex& complex);

bool is_unmixed(const SimplicialComplex& complex);

/// Minimal primes of I_F(Δ); one per minimal vertex cover, in the same order.
std::vector<PrimeComponent> facet_ideal_decomposition(const SimplicialComplex& complex);

/// "(x1,x3) ∩ (x2)"
std::string to_string(const std::vector<PrimeComponent>& components);

/// Inclusion-minimal vertex subsets that are not faces, lexicographic within
/// size, smaller sizes first.
std::vector<Face> stanley_reisner_generators(const SimplicialComplex& complex);

/// 3^{n-2}(2n^2 + 19n + 9); throws DomainError for n < 2, where the formula
/// disagrees with enumeration.
std::int64_t friendship_cover_count(int n);

} // namespace tsc
