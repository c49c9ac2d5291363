#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shufmat/errors.hpp"
#include "shufmat/int_matrix.hpp"
#include "shufmat/mixed_radix.hpp"
#include "shufmat/permutation.hpp"

namespace shufmat {

/// Dense shuffle matrices are refused above this size unless the caller
/// raises the limit.
inline constexpr std::int64_t default_oracle_limit = 4096;

namespace detail {

/// The index permutation induced on {0,...,prod(dims)-1} by permuting digit
/// positions with sigma (0-based): decode x against dims, move digit
/// sigma^{-1}(j) to position j, and encode against the reordered dims.
/// Dimension-1 entries are permitted.
inline Permutation dims_shuffle(std::span<const std::int64_t> dims, const Permutation& sigma) {
    const auto m = dims.size();
    if (static_cast<std::size_t>(sigma.degree()) != m)
        throw std::invalid_argument("sigma degree does not match dimension count");
    const Permutation sigma_inv = inverse(sigma);
    std::vector<std::int64_t> new_dims(m);
    std::int64_t total = 1;
    for (std::size_t j = 0; j < m; ++j) {
        new_dims[j] = dims[static_cast<std::size_t>(sigma_inv(static_cast<std::int64_t>(j)))];
        total *= dims[j];
    }
    std::vector<std::int64_t> img(static_cast<std::size_t>(total));
    std::vector<std::int64_t> word(m);
    for (std::int64_t x = 0; x < total; ++x) {
        const auto digits = mixed_decode(x, dims);
        for (std::size_t j = 0; j < m; ++j)
            word[j] = digits[static_cast<std::size_t>(sigma_inv(static_cast<std::int64_t>(j)))];
        img[static_cast<std::size_t>(x)] = mixed_encode(word, new_dims);
    }
    return Permutation(std::move(img));
}

/// Literal evaluation of the defining sum: over all digit tuples
/// (i_1,...,i_m) add the Kronecker chain of elementary matrices
/// E^{i_{sigma^{-1}(j)}, i_j} of shape dims[sigma^{-1}(j)] x dims[j].
inline IntMatrix definition_sum(std::span<const std::int64_t> dims, const Permutation& sigma) {
    const auto m = dims.size();
    const Permutation sigma_inv = inverse(sigma);
    std::int64_t total = 1;
    for (auto d : dims) total *= d;
    IntMatrix acc(total, total);
    std::vector<std::int64_t> digit(m, 0);
    while (true) {
        IntMatrix term(1, 1);
        term(0, 0) = 1;
        for (std::size_t j = 0; j < m; ++j) {
            const auto src = static_cast<std::size_t>(sigma_inv(static_cast<std::int64_t>(j)));
            term = kron(term, elementary(digit[src] + 1, digit[j] + 1, dims[src], dims[j]));
        }
        acc = acc + term;
        std::size_t j = m;
        while (j-- > 0) {
            if (++digit[j] < dims[j]) break;
            digit[j] = 0;
            if (j == 0) return acc;
        }
    }
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    std::int64_t t = 0, new_t = 1, r = n, new_r = a % n;
    while (new_r != 0) {
        const auto q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument(std::to_string(a) + " has no inverse modulo " + std::to_string(n));
    return t < 0 ? t + n : t;
}

} // namespace detail

/// Branch indices plus a permutation of their positions (0-based, degree m).
struct ShuffleSpec {
    BranchIndices basis;
    Permutation sigma;

    ShuffleSpec(BranchIndices basis_, Permutation sigma_)
        : basis(std::move(basis_)), sigma(std::move(sigma_)) {
        if (static_cast<std::size_t>(sigma.degree()) != basis.size())
            throw std::invalid_argument("sigma degree " + std::to_string(sigma.degree()) +
                                        " does not match branch count " + std::to_string(basis.size()));
    }
};

/// (n_{sigma^{-1}(1)},...,n_{sigma^{-1}(m)}): the basis the shuffled words
/// live in.
inline BranchIndices reordered_basis(const BranchIndices& basis, const Permutation& sigma) {
    if (static_cast<std::size_t>(sigma.degree()) != basis.size())
        throw std::invalid_argument("sigma degree does not match branch count");
    const Permutation sigma_inv = inverse(sigma);
    std::vector<std::int64_t> out(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        out[j] = basis[static_cast<std::size_t>(sigma_inv(static_cast<std::int64_t>(j)))];
    return BranchIndices(std::move(out));
}

/// The shuffling permutation of {0,...,N-1} computed digitwise in O(N*m).
inline Permutation shuffle_perm(const ShuffleSpec& spec) {
    return detail::dims_shuffle(spec.basis.indices(), spec.sigma);
}

/// The same permutation matrix built literally as the defining sum of
/// Kronecker products of elementary matrices. Quadratic in N; test oracle,
/// not a fast path.
inline IntMatrix shuffle_matrix_oracle(const ShuffleSpec& spec,
                                       std::int64_t limit = default_oracle_limit) {
    if (spec.basis.total() > limit)
        throw limit_error("shuffle matrix of size " + std::to_string(spec.basis.total()) +
                          " exceeds limit " + std::to_string(limit));
    return detail::definition_sum(spec.basis.indices(), spec.sigma);
}

/// The shuffle induced by the forward cycle (1 2 ... m): reading the N
/// values disposed in an (n_1...n_{m-1}) x n_m array column by column.
inline Permutation perfect_shuffle(const BranchIndices& basis) {
    const auto m = static_cast<std::int64_t>(basis.size());
    std::vector<std::int64_t> img(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) img[static_cast<std::size_t>(j)] = (j + 1) % m;
    return shuffle_perm(ShuffleSpec(basis, Permutation(std::move(img))));
}

/// The step-k shuffle on {0,...,n-1}: its horizontal representation walks
/// 0, k, 2k, ... modulo n-1 and ends with the fixed point n-1. Pointwise
/// that is x -> x * k^{-1} mod (n-1). Defined only for gcd(k, n-1) = 1.
inline Permutation sh_k(std::int64_t n, std::int64_t k) {
    if (n < 3) throw std::invalid_argument("sh_k needs n >= 3");
    if (k < 1 || k > n - 2)
        throw std::invalid_argument("sh_k needs 1 <= k <= n-2; got k=" + std::to_string(k));
    if (std::gcd(k, n - 1) != 1)
        throw std::invalid_argument("sh_k undefined: gcd(" + std::to_string(k) + ", " +
                                    std::to_string(n - 1) + ") != 1");
    const auto k_inv = detail::mod_inverse(k, n - 1);
    std::vector<std::int64_t> img(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n - 1; ++x)
        img[static_cast<std::size_t>(x)] = (x * k_inv) % (n - 1);
    img[static_cast<std::size_t>(n - 1)] = n - 1;
    return Permutation(std::move(img));
}

/// Points fixed by every shuffle of the basis (intersection over all m!
/// position permutations). Always contains 0 and N-1.
inline std::vector<std::int64_t> common_fixed(const BranchIndices& basis) {
    std::vector<bool> fixed(static_cast<std::size_t>(basis.total()), true);
    for (const auto& sigma : symmetric_group(static_cast<std::int64_t>(basis.size()))) {
        const auto p = shuffle_perm(ShuffleSpec(basis, sigma));
        for (std::int64_t x = 0; x < p.degree(); ++x)
            if (p(x) != x) fixed[static_cast<std::size_t>(x)] = false;
    }
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < basis.total(); ++x)
        if (fixed[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

/// The shuffle of tau on the sigma-reordered basis, applied after the
/// shuffle of sigma on the original basis. Equals shuffle_perm(basis,
/// tau o sigma).
inline Permutation compose_shuffles(const BranchIndices& basis, const Permutation& sigma,
                                    const Permutation& tau) {
    const auto first = shuffle_perm(ShuffleSpec(basis, sigma));
    const auto second = shuffle_perm(ShuffleSpec(reordered_basis(basis, sigma), tau));
    return compose(second, first);
}

} // namespace shufmat
