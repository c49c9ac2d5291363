#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "shufmat/errors.hpp"
#include "shufmat/mixed_radix.hpp"
#include "shufmat/permutation.hpp"
#include "shufmat/shuffling.hpp"

namespace shufmat {

inline constexpr std::int64_t default_group_limit = 10'000'000;

/// A finite permutation group held as its full element set, sorted
/// lexicographically by image table.
struct PermGroup {
    std::int64_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }

    bool contains(const Permutation& p) const {
        return std::binary_search(elements.begin(), elements.end(), p);
    }

    /// The group is abelian iff its generators commute pairwise.
    bool abelian() const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            for (std::size_t j = i + 1; j < generators.size(); ++j)
                if (compose(generators[i], generators[j]) != compose(generators[j], generators[i]))
                    return false;
        return true;
    }
};

namespace detail {

struct ImageTableHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace detail

/// Breadth-first saturation under left-multiplication by the generators,
/// starting from the identity. Throws limit_error once the element count
/// passes the limit.
inline PermGroup closure(std::vector<Permutation> generators, std::int64_t degree,
                         std::int64_t limit = default_group_limit) {
    if (limit < 1) throw std::invalid_argument("closure limit must be >= 1");
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                        " does not match group degree " + std::to_string(degree));

    std::unordered_set<std::vector<std::int64_t>, detail::ImageTableHash> seen;
    std::deque<std::vector<std::int64_t>> frontier;
    seen.insert(Permutation::identity(degree).images());
    frontier.push_back(Permutation::identity(degree).images());

    while (!frontier.empty()) {
        const auto current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            std::vector<std::int64_t> next(current.size());
            for (std::size_t x = 0; x < current.size(); ++x)
                next[x] = g(current[x]);
            if (seen.insert(next).second) {
                if (static_cast<std::int64_t>(seen.size()) > limit)
                    throw limit_error("group closure exceeds limit " + std::to_string(limit));
                frontier.push_back(std::move(next));
            }
        }
    }

    PermGroup group;
    group.degree = degree;
    group.generators = std::move(generators);
    std::vector<std::vector<std::int64_t>> tables(seen.begin(), seen.end());
    std::sort(tables.begin(), tables.end());
    group.elements.reserve(tables.size());
    for (auto& t : tables) group.elements.emplace_back(std::move(t));
    return group;
}

/// The subgroup of Sym(N) generated by all m! shuffles of the basis.
inline PermGroup k_group(const BranchIndices& basis, std::int64_t limit = default_group_limit) {
    std::vector<Permutation> gens;
    for (const auto& sigma : symmetric_group(static_cast<std::int64_t>(basis.size())))
        gens.push_back(shuffle_perm(ShuffleSpec(basis, sigma)));
    return closure(std::move(gens), basis.total(), limit);
}

/// Euler totient by direct gcd count.
inline std::int64_t totient(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("totient needs n >= 1");
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

/// The group generated by the step-k shuffles, k coprime to n-1. Its order
/// is totient(n-1).
inline PermGroup gsh_group(std::int64_t n, std::int64_t limit = default_group_limit) {
    if (n < 3) throw std::invalid_argument("gsh_group needs n >= 3");
    std::vector<Permutation> gens;
    for (std::int64_t k = 1; k <= n - 2; ++k)
        if (std::gcd(k, n - 1) == 1) gens.push_back(sh_k(n, k));
    return closure(std::move(gens), n, limit);
}

inline bool index_lower_bound_check(const BranchIndices& basis, const PermGroup& group) {
    const auto n = basis.total();
    const auto bound = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(n - 1) *
                       static_cast<unsigned __int128>(group.order());
    if (n <= 33) {
        // 33! still fits in 128 bits, and no enumerable group is larger.
        unsigned __int128 fact = 1;
        for (std::int64_t i = 2; i <= n; ++i) fact *= static_cast<unsigned __int128>(i);
        return fact >= bound;
    }
    const double log_fact = std::lgamma(static_cast<double>(n) + 1.0);
    const double log_bound = std::log(static_cast<double>(n)) + std::log(static_cast<double>(n - 1)) +
                             std::log(static_cast<double>(group.order()));
    return log_fact >= log_bound;
}

/// Checks [Sym(N) : K] >= N(N-1), i.e. N! >= N(N-1)|K|.
inline bool index_lower_bound_check(const BranchIndices& basis,
                                    std::int64_t limit = default_group_limit) {
    return index_lower_bound_check(basis, k_group(basis, limit));
}

} // namespace shufmat
