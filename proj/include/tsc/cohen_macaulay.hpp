#pragma once

#include <cstdint>
#include <optional>

#include "tsc/complex.hpp"
#include "tsc/field.hpp"
#include "tsc/graph.hpp"

namespace tsc {

/// A face whose link has non-vanishing reduced homology below the allowed degree.
struct CmWitness {
    Face face;
    int r = 0;
    std::int64_t betti = 0;

    friend bool operator==(const CmWitness&, const CmWitness&) = default;
};

struct CmReport {
    bool verdict = false;
    FieldSpec field = default_field();
    std::optional<CmWitness> witness;
    bool purity_ok = false;
};

/**
 * Reisner's criterion: Δ is Cohen-Macaulay over `field` iff for every face σ
 * (∅ included) H̃_r(link σ) = 0 for 0 <= r < dim link(σ).
 *
 * Degree -1 is never tested. Faces are visited from largest to smallest,
 * lexicographically within a size; the first failure is the witness.
 */
CmReport is_cm(const SimplicialComplex& complex, FieldSpec field = default_field());

/**
 * CM in codimension t: Δ (of dimension d-1) is pure and H̃_r(link σ) = 0 for
 * every σ with |σ| >= t and r < d - |σ| - 1. t = 1 is the Buchsbaum property.
 * Throws InputError unless 0 <= t <= dim Δ + 1.
 */
CmReport is_cm_t(const SimplicialComplex& complex, int t, FieldSpec field = default_field());

inline CmReport is_buchsbaum(const SimplicialComplex& complex, FieldSpec field = default_field())
{
    return is_cm_t(complex, 1, field);
}

/// For connected G, Δ_T(G) is CM iff H̃_1(Δ_T(G)) = 0. Throws InputError on a
/// disconnected graph.
bool tsc_cm_shortcut(const Graph& g, const TotalLabeling& labels,
                     FieldSpec field = default_field());

/// Every vertex link is facet-connected.
bool vertex_links_connected(const SimplicialComplex& complex);

} // namespace tsc
