#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shufmat/errors.hpp"

namespace shufmat {

/// Dense materializations are refused above this many index values unless
/// the caller passes an explicit limit.
inline constexpr std::int64_t default_total_limit = std::int64_t{1} << 20;

namespace detail {

/// Mixed-radix digits of x, most significant first. Unlike the public
/// codec, dims entries of 1 are permitted (their digit is always 0).
inline std::vector<std::int64_t> mixed_decode(std::int64_t x, std::span<const std::int64_t> dims) {
    std::vector<std::int64_t> digits(dims.size());
    for (std::size_t j = dims.size(); j-- > 0;) {
        digits[j] = x % dims[j];
        x /= dims[j];
    }
    return digits;
}

inline std::int64_t mixed_encode(std::span<const std::int64_t> digits, std::span<const std::int64_t> dims) {
    std::int64_t x = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) x = x * dims[j] + digits[j];
    return x;
}

} // namespace detail

/// An ordered tuple (n_1,...,n_m), m >= 2 and every n_i >= 2, indexing the
/// levels of a rooted tree whose m-th level has total() = n_1*...*n_m
/// vertices. Positions are stored and addressed 0-based.
class BranchIndices {
public:
    explicit BranchIndices(std::vector<std::int64_t> indices,
                           std::int64_t total_limit = default_total_limit)
        : indices_(std::move(indices)) {
        if (indices_.size() < 2)
            throw std::invalid_argument("branch indices need at least two entries");
        total_ = 1;
        for (auto n : indices_) {
            if (n < 2) throw std::invalid_argument("every branch index must be >= 2");
            total_ *= n;
            if (total_ > total_limit)
                throw limit_error("branch index product exceeds limit " + std::to_string(total_limit));
        }
    }

    std::size_t size() const { return indices_.size(); }
    std::int64_t operator[](std::size_t j) const { return indices_[j]; }
    std::int64_t total() const { return total_; }
    const std::vector<std::int64_t>& indices() const { return indices_; }

    bool homogeneous() const {
        for (auto n : indices_)
            if (n != indices_.front()) return false;
        return true;
    }

    bool operator==(const BranchIndices& other) const { return indices_ == other.indices_; }

private:
    std::vector<std::int64_t> indices_;
    std::int64_t total_ = 0;
};

/// Positional weights (u_{m-1},...,u_0): entry j is the weight of digit j,
/// i.e. the product of the branch indices after position j (so the last
/// entry is 1).
using WeightVector = std::vector<std::int64_t>;

inline WeightVector weight_vector(const BranchIndices& basis) {
    WeightVector w(basis.size());
    std::int64_t acc = 1;
    for (std::size_t j = basis.size(); j-- > 0;) {
        w[j] = acc;
        acc *= basis[j];
    }
    return w;
}

/// A digit word (x_1,...,x_m) against a basis, 0 <= x_j <= n_j - 1.
struct DigitWord {
    BranchIndices basis;
    std::vector<std::int64_t> digits;

    DigitWord(BranchIndices basis_, std::vector<std::int64_t> digits_)
        : basis(std::move(basis_)), digits(std::move(digits_)) {
        if (digits.size() != basis.size())
            throw std::invalid_argument("digit count does not match basis length");
        for (std::size_t j = 0; j < digits.size(); ++j)
            if (digits[j] < 0 || digits[j] >= basis[j])
                throw std::invalid_argument("digit " + std::to_string(digits[j]) +
                                            " out of range at position " + std::to_string(j));
    }
};

/// Integer value sum x_j * u_{m-j}; words in lexicographic order map to
/// 0,1,...,N-1 in increasing order.
inline std::int64_t encode(const DigitWord& word) {
    return detail::mixed_encode(word.digits, word.basis.indices());
}

inline DigitWord decode(std::int64_t x, const BranchIndices& basis) {
    if (x < 0 || x >= basis.total())
        throw std::out_of_range("value " + std::to_string(x) + " outside [0, " +
                                std::to_string(basis.total() - 1) + "]");
    return DigitWord(basis, detail::mixed_decode(x, basis.indices()));
}

} // namespace shufmat
