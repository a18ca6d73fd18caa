#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsc/complex.hpp"
#include "tsc/field.hpp"
#include "tsc/rank.hpp"

namespace tsc {

/**
 * Matrix of ∂_r : C_r -> C_{r-1}.
 *
 * Rows are the (r-1)-faces and columns the r-faces, both in lexicographic
 * order. The column of σ = {i_0 < ... < i_r} holds (-1)^j in the row of σ
 * with i_j removed.
 */
struct BoundaryMatrix {
    int r = 0;
    std::vector<Face> row_basis;
    std::vector<Face> col_basis;
    SparseIntMatrix entries;

    std::size_t rows() const { return entries.rows; }
    std::size_t cols() const { return entries.cols; }
    /// Dense lookup, for tests and small matrices.
    std::int64_t at(std::size_t row, std::size_t col) const;
};

/// Throws InputError unless 1 <= r <= dim Δ.
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int r);

/// Same, from faces already bucketed by all_faces().
BoundaryMatrix boundary_matrix(const std::vector<std::vector<Face>>& faces, int r);

inline std::size_t rank_over(const BoundaryMatrix& m, FieldSpec field)
{
    return rank_over(m.entries, field);
}

/// One "r row col value" line per non-zero, rows and columns 0-based.
std::string export_triplets(const BoundaryMatrix& m);

/**
 * Ranks and Betti numbers over one field. Vectors are indexed by dimension
 * r = 0..dim Δ; rank_im has one extra slot so that rank_im[dim+1] = 0, and
 * rank_im[0] = 0 (∂_0 is the zero map).
 */
struct HomologySummary {
    FieldSpec field = default_field();
    FVector alpha;
    std::vector<std::int64_t> rank_im;
    std::vector<std::int64_t> rank_ker;
    std::vector<std::int64_t> betti;
    std::vector<std::int64_t> reduced_betti;

    /// 0 beyond the stored range.
    std::int64_t reduced(int r) const;
};

HomologySummary homology_summary(const SimplicialComplex& complex, FieldSpec field);

std::int64_t euler_characteristic(const SimplicialComplex& complex);

} // namespace tsc
