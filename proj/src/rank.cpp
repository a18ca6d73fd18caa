#include "tsc/rank.hpp"

#include <algorithm>
#include <unordered_map>

#include <gmpxx.h>

namespace tsc {

// All routines compute the dimension of the span of the columns; rank is the
// same whether rows or columns are eliminated.

namespace {

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    // Fermat; p is prime.
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1U)
            result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

void make_primitive(std::vector<mpz_class>& v)
{
    mpz_class g = 0;
    for (const auto& x : v)
        if (x != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1)
                return;
        }
    if (g > 1)
        for (auto& x : v)
            if (x != 0)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

using SparseModVec = std::vector<std::pair<std::size_t, std::uint32_t>>;
using SparseZVec = std::vector<std::pair<std::size_t, mpz_class>>;

// v <- v - factor * w (mod p); both sorted by index.
SparseModVec axpy_mod(const SparseModVec& v, std::uint32_t factor, const SparseModVec& w,
                      std::uint32_t p)
{
    SparseModVec out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else {
            std::uint64_t sub = static_cast<std::uint64_t>(factor) * w[j].second % p;
            std::uint64_t base = 0;
            std::size_t idx = w[j].first;
            if (i < v.size() && v[i].first == idx)
                base = v[i++].second;
            ++j;
            std::uint64_t val = (base + p - sub) % p;
            if (val)
                out.emplace_back(idx, static_cast<std::uint32_t>(val));
        }
    }
    return out;
}

// v <- a * v - b * w over Z, then divided by its content.
SparseZVec combine_z(const mpz_class& a, const SparseZVec& v, const mpz_class& b,
                     const SparseZVec& w)
{
    SparseZVec out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.emplace_back(v[i].first, a * v[i].second);
            ++i;
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, -b * w[j].second);
            ++j;
        } else {
            mpz_class val = a * v[i].second - b * w[j].second;
            if (val != 0)
                out.emplace_back(v[i].first, std::move(val));
            ++i;
            ++j;
        }
    }
    mpz_class g = 0;
    for (const auto& [idx, x] : out)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& [idx, x] : out)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

} // namespace

namespace detail {

std::size_t rank_dense_mod_p(const SparseIntMatrix& m, std::uint32_t p)
{
    const std::size_t width = m.rows;
    std::vector<std::vector<std::uint32_t>> vecs;
    vecs.reserve(m.cols);
    for (const auto& col : m.columns) {
        std::vector<std::uint32_t> v(width, 0);
        for (auto [r, x] : col)
            v[r] = reduce_mod(x, p);
        vecs.push_back(std::move(v));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < width && rank < vecs.size(); ++c) {
        std::size_t piv = rank;
        while (piv < vecs.size() && vecs[piv][c] == 0)
            ++piv;
        if (piv == vecs.size())
            continue;
        std::swap(vecs[rank], vecs[piv]);
        auto& pv = vecs[rank];
        const std::uint64_t inv = inverse_mod(pv[c], p);
        for (std::size_t k = c; k < width; ++k)
            pv[k] = static_cast<std::uint32_t>(pv[k] * inv % p);
        for (std::size_t i = rank + 1; i < vecs.size(); ++i) {
            auto& v = vecs[i];
            if (v[c] == 0)
                continue;
            const std::uint64_t f = v[c];
            for (std::size_t k = c; k < width; ++k)
                if (pv[k])
                    v[k] = static_cast<std::uint32_t>((v[k] + p - f * pv[k] % p) % p);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_sparse_mod_p(const SparseIntMatrix& m, std::uint32_t p)
{
    std::unordered_map<std::size_t, SparseModVec> pivots; // leading index -> monic vector
    for (const auto& col : m.columns) {
        SparseModVec v;
        for (auto [r, x] : col)
            if (auto y = reduce_mod(x, p))
                v.emplace_back(r, y);
        while (!v.empty()) {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end()) {
                const std::uint64_t inv = inverse_mod(v.front().second, p);
                for (auto& [idx, x] : v)
                    x = static_cast<std::uint32_t>(x * inv % p);
                pivots.emplace(v.front().first, std::move(v));
                break;
            }
            v = axpy_mod(v, v.front().second, it->second, p);
        }
    }
    return pivots.size();
}

std::size_t rank_dense_rational(const SparseIntMatrix& m)
{
    const std::size_t width = m.rows;
    std::vector<std::vector<mpz_class>> vecs;
    vecs.reserve(m.cols);
    for (const auto& col : m.columns) {
        std::vector<mpz_class> v(width, 0);
        for (auto [r, x] : col)
            v[r] = static_cast<long>(x);
        vecs.push_back(std::move(v));
    }
    // Fraction-free: v <- pivot * v - v[c] * pivot_vec, then strip the content.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < width && rank < vecs.size(); ++c) {
        std::size_t piv = rank;
        while (piv < vecs.size() && vecs[piv][c] == 0)
            ++piv;
        if (piv == vecs.size())
            continue;
        std::swap(vecs[rank], vecs[piv]);
        const auto& pv = vecs[rank];
        for (std::size_t i = rank + 1; i < vecs.size(); ++i) {
            auto& v = vecs[i];
            if (v[c] == 0)
                continue;
            const mpz_class a = pv[c], b = v[c];
            for (std::size_t k = c; k < width; ++k)
                v[k] = a * v[k] - b * pv[k];
            make_primitive(v);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_sparse_rational(const SparseIntMatrix& m)
{
    std::unordered_map<std::size_t, SparseZVec> pivots;
    for (const auto& col : m.columns) {
        SparseZVec v;
        for (auto [r, x] : col)
            if (x != 0)
                v.emplace_back(r, mpz_class(static_cast<long>(x)));
        while (!v.empty()) {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end()) {
                pivots.emplace(v.front().first, std::move(v));
                break;
            }
            const mpz_class a = it->second.front().second, b = v.front().second;
            v = combine_z(a, v, b, it->second);
        }
    }
    return pivots.size();
}

} // namespace detail

std::size_t rank_over(const SparseIntMatrix& m, FieldSpec field)
{
    const bool dense = m.cols <= kDenseColumnLimit;
    if (field.is_rational())
        return dense ? detail::rank_dense_rational(m) : detail::rank_sparse_rational(m);
    return dense ? detail::rank_dense_mod_p(m, field.characteristic())
                 : detail::rank_sparse_mod_p(m, field.characteristic());
}

} // namespace tsc
