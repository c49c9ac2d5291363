#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "shufmat/errors.hpp"
#include "shufmat/permutation.hpp"
#include "shufmat/shuffling.hpp"

namespace shufmat {

/// Matrix whose cells are either zero or a single power of the primitive
/// modulus-th root of unity omega = exp(2*pi*i/modulus), stored as integer
/// exponents reduced mod modulus. All algebra on these matrices is exact:
/// products only ever add exponents, and any operation that would need the
/// sum of two powers in one cell throws structural_error.
class OmegaMatrix {
public:
    static constexpr std::int32_t zero_cell = -1;

    OmegaMatrix(std::int64_t modulus, std::int64_t rows, std::int64_t cols)
        : modulus_(modulus), rows_(rows), cols_(cols) {
        if (modulus < 1) throw std::invalid_argument("omega modulus must be >= 1");
        if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
        exps_.assign(static_cast<std::size_t>(rows * cols), zero_cell);
    }

    static OmegaMatrix identity(std::int64_t modulus, std::int64_t n) {
        OmegaMatrix m(modulus, n, n);
        for (std::int64_t i = 0; i < n; ++i) m.set(i, i, 0);
        return m;
    }

    std::int64_t modulus() const { return modulus_; }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    bool is_zero(std::int64_t i, std::int64_t j) const { return exp_at(i, j) == zero_cell; }

    /// Exponent in [0, modulus), or zero_cell for a zero cell.
    std::int32_t exp_at(std::int64_t i, std::int64_t j) const {
        return exps_[static_cast<std::size_t>(i * cols_ + j)];
    }

    void set(std::int64_t i, std::int64_t j, std::int64_t exponent) {
        auto e = exponent % modulus_;
        if (e < 0) e += modulus_;
        exps_[static_cast<std::size_t>(i * cols_ + j)] = static_cast<std::int32_t>(e);
    }

    void set_zero(std::int64_t i, std::int64_t j) {
        exps_[static_cast<std::size_t>(i * cols_ + j)] = zero_cell;
    }

    std::complex<double> value(std::int64_t i, std::int64_t j) const {
        const auto e = exp_at(i, j);
        if (e == zero_cell) return {0.0, 0.0};
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                             static_cast<double>(modulus_);
        return {std::cos(angle), std::sin(angle)};
    }

    bool operator==(const OmegaMatrix&) const = default;

private:
    std::int64_t modulus_, rows_, cols_;
    std::vector<std::int32_t> exps_;
};

namespace detail {

inline void require_same_modulus(const OmegaMatrix& a, const OmegaMatrix& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("omega modulus mismatch: " + std::to_string(a.modulus()) +
                                    " vs " + std::to_string(b.modulus()));
}

/// F_size evaluated at omega^step (modulus-th roots): entry (i,j) is the
/// exponent step*i*j mod modulus.
inline OmegaMatrix dft_pow(std::int64_t size, std::int64_t step, std::int64_t modulus) {
    OmegaMatrix m(modulus, size, size);
    for (std::int64_t i = 0; i < size; ++i)
        for (std::int64_t j = 0; j < size; ++j) m.set(i, j, step * i * j);
    return m;
}

} // namespace detail

inline OmegaMatrix matmul(const OmegaMatrix& a, const OmegaMatrix& b) {
    detail::require_same_modulus(a, b);
    if (a.cols() != b.rows())
        throw std::invalid_argument("omega matmul shape mismatch: " + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()));
    OmegaMatrix out(a.modulus(), a.rows(), b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t k = 0; k < a.cols(); ++k) {
            const auto ea = a.exp_at(i, k);
            if (ea == OmegaMatrix::zero_cell) continue;
            for (std::int64_t j = 0; j < b.cols(); ++j) {
                const auto eb = b.exp_at(k, j);
                if (eb == OmegaMatrix::zero_cell) continue;
                if (!out.is_zero(i, j))
                    throw structural_error("omega matmul cell (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") would need a sum of two powers");
                out.set(i, j, static_cast<std::int64_t>(ea) + eb);
            }
        }
    return out;
}

inline OmegaMatrix kron(const OmegaMatrix& a, const OmegaMatrix& b) {
    detail::require_same_modulus(a, b);
    OmegaMatrix out(a.modulus(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) {
            const auto ea = a.exp_at(i, j);
            if (ea == OmegaMatrix::zero_cell) continue;
            for (std::int64_t h = 0; h < b.rows(); ++h)
                for (std::int64_t k = 0; k < b.cols(); ++k) {
                    const auto eb = b.exp_at(h, k);
                    if (eb == OmegaMatrix::zero_cell) continue;
                    out.set(i * b.rows() + h, j * b.cols() + k, static_cast<std::int64_t>(ea) + eb);
                }
        }
    return out;
}

/// Multiplies every nonzero cell by omega^exponent.
inline OmegaMatrix scale(const OmegaMatrix& a, std::int64_t exponent) {
    OmegaMatrix out = a;
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j)
            if (!a.is_zero(i, j)) out.set(i, j, static_cast<std::int64_t>(a.exp_at(i, j)) + exponent);
    return out;
}

inline OmegaMatrix transpose(const OmegaMatrix& a) {
    OmegaMatrix out(a.modulus(), a.cols(), a.rows());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j)
            if (!a.is_zero(i, j)) out.set(j, i, a.exp_at(i, j));
    return out;
}

/// Permutation matrix with P e_x = e_{f(x)} over the omega cell grammar.
inline OmegaMatrix perm_to_omega(const Permutation& f, std::int64_t modulus) {
    OmegaMatrix p(modulus, f.degree(), f.degree());
    for (std::int64_t x = 0; x < f.degree(); ++x) p.set(f(x), x, 0);
    return p;
}

/// The n x n transform matrix: entry (i,j) = omega^{ij}, the Vandermonde
/// matrix at 1, omega, omega^2, ...
inline OmegaMatrix dft_matrix(std::int64_t n) { return detail::dft_pow(n, 1, n); }

/// diag(W^0, W^1, ..., W^{s-1}) for the scalar W = omega^base_exponent,
/// as exponents mod n.
inline OmegaMatrix diag_power(std::int64_t base_exponent, std::int64_t s, std::int64_t n) {
    if (s < 1) throw std::invalid_argument("diag_power needs s >= 1");
    OmegaMatrix m(n, s, s);
    for (std::int64_t t = 0; t < s; ++t) m.set(t, t, t * base_exponent);
    return m;
}

/// The twiddle diagonal of size n = r*s: block i of size s carries the i-th
/// power of diag(omega^0,...,omega^{s-1}), so the entry at index i*s+j is
/// omega^{ij}.
inline OmegaMatrix twiddle(std::int64_t r, std::int64_t s, std::int64_t n) {
    if (r < 1 || s < 1 || n != r * s)
        throw std::invalid_argument("twiddle needs n = r*s with r,s >= 1");
    OmegaMatrix m(n, n, n);
    for (std::int64_t i = 0; i < r; ++i)
        for (std::int64_t j = 0; j < s; ++j) m.set(i * s + j, i * s + j, i * j);
    return m;
}

/// Exact check of the general radix identity for n = r*s:
///   F_n(omega) P = (F_r(omega^s) x I_s) T (I_r x F_s(omega^r)),
/// where P interleaves x_1*s + x_2 -> x_2*r + x_1 and T is the twiddle
/// diagonal. Both sides are built in exponent arithmetic and compared cell
/// by cell.
inline bool radix_identity_check(std::int64_t r, std::int64_t s) {
    if (r < 1 || s < 1 || r * s < 2)
        throw std::invalid_argument("radix_identity_check needs r, s >= 1 with r*s >= 2");
    const auto n = r * s;

    const std::vector<std::int64_t> dims{r, s};
    const auto interleave = detail::dims_shuffle(dims, Permutation(std::vector<std::int64_t>{1, 0}));
    const auto lhs = matmul(dft_matrix(n), perm_to_omega(interleave, n));

    const auto left = kron(detail::dft_pow(r, s, n), OmegaMatrix::identity(n, s));
    const auto right = kron(OmegaMatrix::identity(n, r), detail::dft_pow(s, r, n));
    const auto rhs = matmul(matmul(left, twiddle(r, s, n)), right);

    return lhs == rhs;
}

/// The block family of the transform factorization for a shuffle spec:
/// C_{hk} diagonal, A_h dense, B_{hk} = C_{hk} * A_h. Block indices h, k
/// run over 0..n_m-1 and every block is square of size N/n_m.
struct FactorBlocks {
    std::int64_t modulus = 0;    // N
    std::int64_t last_index = 0; // n_m
    std::int64_t block_size = 0; // N / n_m
    std::vector<OmegaMatrix> C;  // row-major (h, k) grid
    std::vector<OmegaMatrix> A;  // indexed by h
    std::vector<OmegaMatrix> B;  // row-major (h, k) grid

    const OmegaMatrix& c_block(std::int64_t h, std::int64_t k) const {
        return C[static_cast<std::size_t>(h * last_index + k)];
    }
    const OmegaMatrix& b_block(std::int64_t h, std::int64_t k) const {
        return B[static_cast<std::size_t>(h * last_index + k)];
    }
};

/// Builds the blocks of F_N (P^sigma)^T:
///   C_{hk} = omega^{(Nh/n_m) * inv(Nk/n_m)} * diag_power(inv(Nk/n_m), N/n_m)
///   A_h(i,j) = omega^{(i + hN/n_m) * inv(j)}
/// with inv the inverse of the shuffling permutation.
inline FactorBlocks theorem_blocks(const ShuffleSpec& spec) {
    const auto n = spec.basis.total();
    const auto n_m = spec.basis[spec.basis.size() - 1];
    const auto bs = n / n_m;
    const auto inv = inverse(shuffle_perm(spec));

    FactorBlocks blocks;
    blocks.modulus = n;
    blocks.last_index = n_m;
    blocks.block_size = bs;

    for (std::int64_t h = 0; h < n_m; ++h) {
        OmegaMatrix a(n, bs, bs);
        for (std::int64_t i = 0; i < bs; ++i)
            for (std::int64_t j = 0; j < bs; ++j) a.set(i, j, (i + h * bs) * inv(j));
        blocks.A.push_back(std::move(a));
    }
    for (std::int64_t h = 0; h < n_m; ++h)
        for (std::int64_t k = 0; k < n_m; ++k) {
            const auto col_rep = inv(k * bs);
            auto c = scale(diag_power(col_rep, bs, n), h * bs * col_rep);
            blocks.B.push_back(matmul(c, blocks.A[static_cast<std::size_t>(h)]));
            blocks.C.push_back(std::move(c));
        }
    return blocks;
}

inline OmegaMatrix assemble_blocks(const FactorBlocks& blocks) {
    const auto n = blocks.modulus;
    const auto bs = blocks.block_size;
    OmegaMatrix out(n, n, n);
    for (std::int64_t h = 0; h < blocks.last_index; ++h)
        for (std::int64_t k = 0; k < blocks.last_index; ++k) {
            const auto& b = blocks.b_block(h, k);
            for (std::int64_t i = 0; i < bs; ++i)
                for (std::int64_t j = 0; j < bs; ++j)
                    if (!b.is_zero(i, j)) out.set(h * bs + i, k * bs + j, b.exp_at(i, j));
        }
    return out;
}

/// F_N (P^sigma)^T computed directly: column j of the product is column
/// inv(j) of the plain transform matrix.
inline OmegaMatrix dft_times_shuffle_transpose(const ShuffleSpec& spec) {
    const auto n = spec.basis.total();
    const auto inv = inverse(shuffle_perm(spec));
    const auto f = dft_matrix(n);
    OmegaMatrix out(n, n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) out.set(i, j, f.exp_at(i, inv(j)));
    return out;
}

/// Exact verification of the block factorization: the assembled B grid must
/// equal F_N (P^sigma)^T exponent for exponent.
inline bool verify_factorization(const ShuffleSpec& spec,
                                 std::int64_t limit = default_oracle_limit) {
    if (spec.basis.total() > limit)
        throw limit_error("factorization check of size " + std::to_string(spec.basis.total()) +
                          " exceeds limit " + std::to_string(limit));
    return assemble_blocks(theorem_blocks(spec)) == dft_times_shuffle_transpose(spec);
}

} // namespace shufmat
