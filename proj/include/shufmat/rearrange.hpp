#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shufmat/errors.hpp"
#include "shufmat/int_matrix.hpp"
#include "shufmat/shuffling.hpp"

namespace shufmat {

/// An ordered list of Kronecker factors A_0,...,A_{m-1}. Factor positions
/// here are 0-based, and scalar (1x1 or 1xk) factors are allowed: the
/// rearrangement algebra does not need the >= 2 restriction that tree
/// branch indices carry.
struct FactorList {
    std::vector<IntMatrix> matrices;

    explicit FactorList(std::vector<IntMatrix> ms) : matrices(std::move(ms)) {
        if (matrices.size() < 2) throw std::invalid_argument("need at least two Kronecker factors");
    }

    std::size_t size() const { return matrices.size(); }

    std::vector<std::int64_t> row_dims() const {
        std::vector<std::int64_t> d;
        d.reserve(matrices.size());
        for (const auto& m : matrices) d.push_back(m.rows());
        return d;
    }
    std::vector<std::int64_t> col_dims() const {
        std::vector<std::int64_t> d;
        d.reserve(matrices.size());
        for (const auto& m : matrices) d.push_back(m.cols());
        return d;
    }
};

/// Left rearrangement matrix: the shuffle matrix over the row dimensions
/// for sigma (0-based positions). Square of size prod(row_dims).
inline IntMatrix left_matrix(std::span<const std::int64_t> row_dims, const Permutation& sigma) {
    return perm_to_matrix(detail::dims_shuffle(row_dims, sigma));
}

/// Right rearrangement matrix: the transpose of the left matrix built over
/// the column dimensions.
inline IntMatrix right_matrix(std::span<const std::int64_t> col_dims, const Permutation& sigma) {
    return transpose(left_matrix(col_dims, sigma));
}

inline IntMatrix kron_all(const FactorList& factors) {
    IntMatrix acc = factors.matrices.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors.matrices[i]);
    return acc;
}

namespace detail {

inline void check_rearrange_size(const FactorList& factors, std::int64_t limit) {
    std::int64_t r = 1, c = 1;
    for (const auto& m : factors.matrices) {
        r *= m.rows();
        c *= m.cols();
        if (r > limit || c > limit)
            throw limit_error("rearranged Kronecker product exceeds size limit " +
                              std::to_string(limit));
    }
}

} // namespace detail

/// L * (A_0 x ... x A_{m-1}) * R, which equals the Kronecker product of the
/// factors reordered as A_{sigma^{-1}(0)}, ..., A_{sigma^{-1}(m-1)}. L and R
/// are applied as row/column relabelings; the explicit matrix products are
/// kept for the test oracles only.
inline IntMatrix rearrange_kron(const FactorList& factors, const Permutation& sigma,
                                std::int64_t limit = default_total_limit) {
    if (static_cast<std::size_t>(sigma.degree()) != factors.size())
        throw std::invalid_argument("sigma degree does not match factor count");
    detail::check_rearrange_size(factors, limit);
    const auto product = kron_all(factors);
    const auto row_relabel = inverse(detail::dims_shuffle(factors.row_dims(), sigma));
    const auto col_relabel = inverse(detail::dims_shuffle(factors.col_dims(), sigma));
    IntMatrix out(product.rows(), product.cols());
    for (std::int64_t p = 0; p < out.rows(); ++p)
        for (std::int64_t q = 0; q < out.cols(); ++q)
            out(p, q) = product(row_relabel(p), col_relabel(q));
    return out;
}

/// Square case: conjugation L * (A_0 x ... x A_{m-1}) * L^{-1} with
/// L^{-1} = L^T.
inline IntMatrix conjugate_kron(const FactorList& factors, const Permutation& sigma,
                                std::int64_t limit = default_total_limit) {
    for (const auto& m : factors.matrices)
        if (m.rows() != m.cols())
            throw std::invalid_argument("conjugate_kron needs square factors; got " +
                                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return rearrange_kron(factors, sigma, limit);
}

} // namespace shufmat
