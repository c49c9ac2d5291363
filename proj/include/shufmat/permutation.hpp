#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shufmat/errors.hpp"

namespace shufmat {

/// A bijection of {0,...,d-1} stored as an image table.
class Permutation {
public:
    explicit Permutation(std::vector<std::int64_t> images) : images_(std::move(images)) {
        const auto d = static_cast<std::int64_t>(images_.size());
        if (d == 0) throw std::invalid_argument("permutation degree must be positive");
        std::vector<bool> seen(images_.size(), false);
        for (auto v : images_) {
            if (v < 0 || v >= d)
                throw std::invalid_argument("image " + std::to_string(v) + " out of range for degree " +
                                            std::to_string(d));
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("image table is not a bijection: " + std::to_string(v) +
                                            " repeats");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(std::int64_t degree) {
        std::vector<std::int64_t> img(static_cast<std::size_t>(degree));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    std::int64_t degree() const { return static_cast<std::int64_t>(images_.size()); }
    std::int64_t operator()(std::int64_t x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<std::int64_t>& images() const { return images_; }

    bool is_identity() const {
        for (std::int64_t x = 0; x < degree(); ++x)
            if (images_[static_cast<std::size_t>(x)] != x) return false;
        return true;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::int64_t> images_;
};

/// Composition acts right-to-left: compose(f, g)(x) = f(g(x)), matching the
/// matrix identity P_f * P_g = P_{f o g}.
inline Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("cannot compose permutations of degrees " +
                                    std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
    std::vector<std::int64_t> img(static_cast<std::size_t>(f.degree()));
    for (std::int64_t x = 0; x < f.degree(); ++x) img[static_cast<std::size_t>(x)] = f(g(x));
    return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& f) {
    std::vector<std::int64_t> img(static_cast<std::size_t>(f.degree()));
    for (std::int64_t x = 0; x < f.degree(); ++x) img[static_cast<std::size_t>(f(x))] = x;
    return Permutation(std::move(img));
}

/// Canonical cycle form: every point appears (fixed points as singletons),
/// each cycle starts at its minimum, cycles sorted by minimum.
struct CycleDecomposition {
    std::vector<std::vector<std::int64_t>> cycles;

    std::string str() const {
        std::string out;
        for (const auto& c : cycles) {
            out += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(c[i]);
            }
            out += ')';
        }
        return out;
    }
};

inline CycleDecomposition cycles(const Permutation& f) {
    CycleDecomposition dec;
    std::vector<bool> seen(static_cast<std::size_t>(f.degree()), false);
    for (std::int64_t s = 0; s < f.degree(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<std::int64_t> cycle{s};
        seen[static_cast<std::size_t>(s)] = true;
        for (std::int64_t t = f(s); t != s; t = f(t)) {
            seen[static_cast<std::size_t>(t)] = true;
            cycle.push_back(t);
        }
        dec.cycles.push_back(std::move(cycle));
    }
    return dec;
}

/// Builds the permutation with the given disjoint cycles; points not
/// mentioned are fixed. Throws on overlaps or out-of-range points.
inline Permutation from_cycles(const std::vector<std::vector<std::int64_t>>& cycle_list,
                               std::int64_t degree) {
    if (degree <= 0) throw std::invalid_argument("permutation degree must be positive");
    std::vector<std::int64_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& c : cycle_list) {
        for (auto p : c) {
            if (p < 0 || p >= degree)
                throw std::invalid_argument("cycle point " + std::to_string(p) +
                                            " out of range for degree " + std::to_string(degree));
            if (used[static_cast<std::size_t>(p)])
                throw std::invalid_argument("cycles overlap at point " + std::to_string(p));
            used[static_cast<std::size_t>(p)] = true;
        }
        for (std::size_t i = 0; i < c.size(); ++i)
            img[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
    return Permutation(std::move(img));
}

inline Permutation from_cycles(const CycleDecomposition& dec, std::int64_t degree) {
    return from_cycles(dec.cycles, degree);
}

/// The listing h with h[t] = f^{-1}(t): position t of the row holds the
/// point that f sends to t, so f(x) is the position of x in the sequence.
inline std::vector<std::int64_t> horizontal(const Permutation& f) {
    std::vector<std::int64_t> h(static_cast<std::size_t>(f.degree()));
    for (std::int64_t x = 0; x < f.degree(); ++x) h[static_cast<std::size_t>(f(x))] = x;
    return h;
}

inline std::vector<std::int64_t> fixed_points(const Permutation& f) {
    std::vector<std::int64_t> fixed;
    for (std::int64_t x = 0; x < f.degree(); ++x)
        if (f(x) == x) fixed.push_back(x);
    return fixed;
}

/// Least k >= 1 with f^k = identity (lcm of cycle lengths).
inline std::int64_t order(const Permutation& f) {
    std::int64_t result = 1;
    for (const auto& c : cycles(f).cycles) {
        const auto len = static_cast<std::int64_t>(c.size());
        const auto g = std::gcd(result, len);
        const auto next = static_cast<__int128>(result) / g * len;
        if (next > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("permutation order overflows 64 bits");
        result = static_cast<std::int64_t>(next);
    }
    return result;
}

/// Parses cycle notation such as "(1 3)(2 5)" or "()" (identity). Points
/// may be separated by spaces or commas. With one_based set, the text uses
/// points 1..degree and they are shifted down on input.
inline Permutation parse_cycles(std::string_view text, std::int64_t degree, bool one_based) {
    std::vector<std::vector<std::int64_t>> cycle_list;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("malformed cycle string: expected '(' at offset " +
                                        std::to_string(i));
        ++i;
        std::vector<std::int64_t> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i >= text.size())
                throw std::invalid_argument("malformed cycle string: unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument(std::string("malformed cycle string: unexpected '") +
                                            text[i] + "'");
            std::int64_t value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                value = value * 10 + (text[i++] - '0');
            if (one_based) {
                if (value < 1)
                    throw std::invalid_argument("cycle points are 1-based; got " +
                                                std::to_string(value));
                --value;
            }
            cycle.push_back(value);
        }
        if (!cycle.empty()) cycle_list.push_back(std::move(cycle));
        skip_ws();
    }
    return from_cycles(cycle_list, degree);
}

/// All m! permutations of degree m, ordered lexicographically by image table.
inline std::vector<Permutation> symmetric_group(std::int64_t m) {
    if (m < 1 || m > 10)
        throw limit_error("symmetric_group enumeration supports degrees 1..10");
    std::vector<std::int64_t> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> all;
    do {
        all.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return all;
}

} // namespace shufmat
