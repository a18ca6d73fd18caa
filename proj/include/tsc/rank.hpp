#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tsc/field.hpp"

namespace tsc {

/// Integer matrix stored column-wise; each column lists (row, value) with
/// rows strictly increasing and values non-zero.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
};

/// Above this many columns rank_over switches from dense to sparse elimination.
inline constexpr std::size_t kDenseColumnLimit = 10'000;

/// Exact rank over `field`.
std::size_t rank_over(const SparseIntMatrix& m, FieldSpec field);

namespace detail {
std::size_t rank_dense_mod_p(const SparseIntMatrix& m, std::uint32_t p);
std::size_t rank_sparse_mod_p(const SparseIntMatrix& m, std::uint32_t p);
std::size_t rank_dense_rational(const SparseIntMatrix& m);
std::size_t rank_sparse_rational(const SparseIntMatrix& m);
} // namespace detail

} // namespace tsc
