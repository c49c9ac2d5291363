#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shufmat/errors.hpp"
#include "shufmat/omega.hpp"

namespace shufmat {

using ComplexVector = std::vector<std::complex<double>>;

/// Direct O(n^2) transform y_j = sum_k x_k omega^{jk}; the reference the
/// fast path is measured against.
inline ComplexVector naive_dft(const ComplexVector& x) {
    const auto n = static_cast<std::int64_t>(x.size());
    if (n < 1) throw std::invalid_argument("naive_dft needs a nonempty vector");
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
        roots[static_cast<std::size_t>(t)] = {std::cos(angle), std::sin(angle)};
    }
    ComplexVector y(x.size());
    for (std::int64_t j = 0; j < n; ++j) {
        std::complex<double> acc{0.0, 0.0};
        std::int64_t idx = 0;
        for (std::int64_t k = 0; k < n; ++k) {
            acc += x[static_cast<std::size_t>(k)] * roots[static_cast<std::size_t>(idx)];
            idx += j;
            if (idx >= n) idx -= n;
        }
        y[static_cast<std::size_t>(j)] = acc;
    }
    return y;
}

/// One pipeline stage of the factored transform. In application order the
/// stage performs: gather (a shuffle reindexing), then batched small
/// transforms of length radix at stride tail, then a diagonal twiddle
/// scaling. head counts the batched blocks processed so far (1 for the
/// final stage, which needs no gather and no twiddle).
struct FftStage {
    std::int64_t radix = 0;
    std::int64_t head = 0;
    std::int64_t tail = 0;
    std::vector<std::int64_t> gather;          // empty when head == 1
    std::vector<std::int64_t> twiddle_exps;    // exponents mod n; empty when head == 1
    std::vector<std::complex<double>> twiddle; // numeric form of twiddle_exps
    std::vector<std::complex<double>> roots;   // radix-th roots of unity
};

/// A factored-transform plan: the composition of its stages equals the full
/// n-point transform matrix. A single-factor plan degenerates to one direct
/// transform stage.
class FftPlan {
public:
    FftPlan(std::int64_t n, std::vector<std::int64_t> factors)
        : n_(n), factors_(std::move(factors)) {
        if (n < 1) throw std::invalid_argument("plan size must be >= 1");
        if (factors_.empty()) throw std::invalid_argument("plan needs at least one factor");
        std::int64_t product = 1;
        for (auto f : factors_) {
            if (f < 2) throw std::invalid_argument("plan factors must be >= 2");
            product *= f;
        }
        if (product != n)
            throw std::invalid_argument("factors multiply to " + std::to_string(product) +
                                        ", expected " + std::to_string(n));
        build_stages();
    }

    std::int64_t size() const { return n_; }
    const std::vector<std::int64_t>& factors() const { return factors_; }
    const std::vector<FftStage>& stages() const { return stages_; }

    /// The multiply-add budget of the batched small transforms: n * sum of
    /// the factors.
    std::uint64_t predicted_mul_adds() const {
        std::uint64_t total = 0;
        for (auto f : factors_) total += static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(f);
        return total;
    }

private:
    void build_stages() {
        const auto m = factors_.size();
        // Peel factors from the right: the stage for factor j sees
        // head = f_1...f_{j-1} blocks and tail = f_{j+1}...f_m trailing copies.
        for (std::size_t j = m; j-- > 0;) {
            FftStage stage;
            stage.radix = factors_[j];
            stage.head = 1;
            for (std::size_t i = 0; i < j; ++i) stage.head *= factors_[i];
            stage.tail = 1;
            for (std::size_t i = j + 1; i < m; ++i) stage.tail *= factors_[i];

            stage.roots.resize(static_cast<std::size_t>(stage.radix));
            for (std::int64_t t = 0; t < stage.radix; ++t) {
                const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) /
                                     static_cast<double>(stage.radix);
                stage.roots[static_cast<std::size_t>(t)] = {std::cos(angle), std::sin(angle)};
            }

            if (stage.head > 1) {
                stage.gather.resize(static_cast<std::size_t>(n_));
                stage.twiddle_exps.resize(static_cast<std::size_t>(n_));
                stage.twiddle.resize(static_cast<std::size_t>(n_));
                for (std::int64_t q = 0; q < stage.head; ++q)
                    for (std::int64_t c = 0; c < stage.radix; ++c)
                        for (std::int64_t o = 0; o < stage.tail; ++o) {
                            const auto dst = (q * stage.radix + c) * stage.tail + o;
                            stage.gather[static_cast<std::size_t>(dst)] =
                                (c * stage.head + q) * stage.tail + o;
                            const auto e = (stage.tail * q * c) % n_;
                            stage.twiddle_exps[static_cast<std::size_t>(dst)] = e;
                            const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                                                 static_cast<double>(n_);
                            stage.twiddle[static_cast<std::size_t>(dst)] = {std::cos(angle),
                                                                            std::sin(angle)};
                        }
            }
            stages_.push_back(std::move(stage));
        }
    }

    std::int64_t n_;
    std::vector<std::int64_t> factors_;
    std::vector<FftStage> stages_;
};

inline FftPlan fft_plan(std::int64_t n, std::vector<std::int64_t> factors) {
    return FftPlan(n, std::move(factors));
}

/// Prime factors of n in ascending order.
inline std::vector<std::int64_t> default_factorization(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cannot factor " + std::to_string(n));
    std::vector<std::int64_t> factors;
    for (std::int64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            factors.push_back(p);
            n /= p;
        }
    if (n > 1) factors.push_back(n);
    if (factors.empty()) factors.push_back(1); // n == 1 never reaches a plan
    return factors;
}

/// Executes the plan. When mul_adds is given it receives the number of
/// complex multiply-accumulate operations performed inside the small
/// transform kernels (twiddle scalings are not multiply-adds and are not
/// counted).
inline ComplexVector fft(const ComplexVector& x, const FftPlan& plan,
                         std::uint64_t* mul_adds = nullptr) {
    const auto n = plan.size();
    if (static_cast<std::int64_t>(x.size()) != n)
        throw std::invalid_argument("input length " + std::to_string(x.size()) +
                                    " does not match plan size " + std::to_string(n));
    ComplexVector cur = x;
    ComplexVector tmp(x.size());
    std::uint64_t count = 0;

    std::size_t max_radix = 0;
    for (const auto& stage : plan.stages())
        max_radix = std::max(max_radix, static_cast<std::size_t>(stage.radix));
    std::vector<std::complex<double>> scratch(max_radix);

    for (const auto& stage : plan.stages()) {
        if (!stage.gather.empty()) {
            for (std::int64_t i = 0; i < n; ++i)
                tmp[static_cast<std::size_t>(i)] =
                    cur[static_cast<std::size_t>(stage.gather[static_cast<std::size_t>(i)])];
            std::swap(cur, tmp);
        }
        const auto f = stage.radix;
        for (std::int64_t q = 0; q < stage.head; ++q)
            for (std::int64_t o = 0; o < stage.tail; ++o) {
                const auto base = q * f * stage.tail + o;
                for (std::int64_t c = 0; c < f; ++c)
                    scratch[static_cast<std::size_t>(c)] =
                        cur[static_cast<std::size_t>(base + c * stage.tail)];
                for (std::int64_t a = 0; a < f; ++a) {
                    std::complex<double> acc{0.0, 0.0};
                    std::int64_t idx = 0;
                    for (std::int64_t c = 0; c < f; ++c) {
                        acc += scratch[static_cast<std::size_t>(c)] *
                               stage.roots[static_cast<std::size_t>(idx)];
                        idx += a;
                        if (idx >= f) idx -= f;
                    }
                    count += static_cast<std::uint64_t>(f);
                    cur[static_cast<std::size_t>(base + a * stage.tail)] = acc;
                }
            }
        if (!stage.twiddle.empty())
            for (std::int64_t i = 0; i < n; ++i)
                cur[static_cast<std::size_t>(i)] *= stage.twiddle[static_cast<std::size_t>(i)];
    }
    if (mul_adds) *mul_adds = count;
    return cur;
}

/// Expands the plan symbolically: the product of the stage matrices, taken
/// in application order, in exact exponent arithmetic. Must equal
/// dft_matrix(n).
inline OmegaMatrix plan_to_omega(const FftPlan& plan) {
    const auto n = plan.size();
    OmegaMatrix acc = OmegaMatrix::identity(n, n);
    for (const auto& stage : plan.stages()) {
        // Stage composite: twiddle diagonal * batched transform * gather.
        OmegaMatrix batch(n, n, n);
        for (std::int64_t q = 0; q < stage.head; ++q)
            for (std::int64_t o = 0; o < stage.tail; ++o)
                for (std::int64_t a = 0; a < stage.radix; ++a)
                    for (std::int64_t c = 0; c < stage.radix; ++c)
                        batch.set((q * stage.radix + a) * stage.tail + o,
                                  (q * stage.radix + c) * stage.tail + o, (n / stage.radix) * a * c);
        OmegaMatrix composite(n, n, n);
        if (!stage.gather.empty()) {
            // Fold the gather in as a column relabeling, then scale rows by
            // the twiddle exponents.
            for (std::int64_t i = 0; i < n; ++i)
                for (std::int64_t j = 0; j < n; ++j)
                    if (!batch.is_zero(i, j))
                        composite.set(i, stage.gather[static_cast<std::size_t>(j)],
                                      static_cast<std::int64_t>(batch.exp_at(i, j)) +
                                          stage.twiddle_exps[static_cast<std::size_t>(i)]);
        } else {
            composite = std::move(batch);
        }
        acc = matmul(composite, acc);
    }
    return acc;
}

} // namespace shufmat
