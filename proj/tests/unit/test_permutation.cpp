#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "shufmat/permutation.hpp"

using namespace shufmat;

namespace {

Permutation random_perm(std::int64_t degree, std::mt19937& rng) {
    std::vector<std::int64_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

} // namespace

TEST_CASE("construction enforces bijectivity") {
    CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<std::int64_t>{}), std::invalid_argument);
    CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("compose is right-to-left") {
    const auto id = Permutation::identity(3);
    const auto g = Permutation({1, 2, 0});
    CHECK(compose(id, g) == g);

    const auto t = from_cycles({{0, 1}}, 3);
    CHECK(compose(t, t).is_identity());

    // (1 2) after (1 3) on {1,2,3}, stored 0-based: pointwise 1->3, 3->2, 2->1.
    const auto f = from_cycles({{0, 1}}, 3);
    const auto h = from_cycles({{0, 2}}, 3);
    CHECK(cycles(compose(f, h)).str() == "(0 2 1)");

    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("inverse") {
    CHECK(inverse(Permutation::identity(5)).is_identity());
    CHECK(inverse(from_cycles({{0, 1, 2}}, 3)) == from_cycles({{0, 2, 1}}, 3));

    // Inverse of the 12-point perfect shuffle, cycle by reversed cycle.
    const Permutation p({0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 11});
    CHECK(cycles(inverse(p)).str() == "(0)(1 3 9 5 4)(2 6 7 10 8)(11)");
}

TEST_CASE("cycles and from_cycles") {
    CHECK(cycles(Permutation::identity(3)).str() == "(0)(1)(2)");

    const Permutation perfect({0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 11});
    CHECK(cycles(perfect).str() == "(0)(1 4 5 9 3)(2 8 10 7 6)(11)");
    CHECK(from_cycles(cycles(perfect), 12) == perfect);

    const auto swapped = from_cycles({{1, 4, 6}, {2, 8, 9, 3}, {5, 10, 7}}, 12);
    CHECK(cycles(swapped).str() == "(0)(1 4 6)(2 8 9 3)(5 10 7)(11)");

    CHECK_THROWS_AS(from_cycles({{0, 1}, {1, 2}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(from_cycles({{0, 3}}, 3), std::invalid_argument);
}

TEST_CASE("horizontal representation") {
    const Permutation perfect({0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 11});
    CHECK(horizontal(perfect) == std::vector<std::int64_t>{0, 3, 6, 9, 1, 4, 7, 10, 2, 5, 8, 11});

    const auto swapped = from_cycles({{1, 4, 6}, {2, 8, 9, 3}, {5, 10, 7}}, 12);
    CHECK(horizontal(swapped) == std::vector<std::int64_t>{0, 6, 3, 9, 1, 7, 4, 10, 2, 8, 5, 11});

    CHECK(horizontal(Permutation::identity(4)) == std::vector<std::int64_t>{0, 1, 2, 3});

    // Definitional: horizontal(f)[t] = inverse(f)(t).
    const auto inv = inverse(swapped);
    const auto h = horizontal(swapped);
    for (std::int64_t t = 0; t < 12; ++t) CHECK(h[static_cast<std::size_t>(t)] == inv(t));
}

TEST_CASE("fixed points") {
    const auto remark = from_cycles({{1, 6}, {3, 8}, {5, 10}}, 12);
    CHECK(fixed_points(remark) == std::vector<std::int64_t>{0, 2, 4, 7, 9, 11});
    CHECK(fixed_points(Permutation::identity(5)) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
    const auto perfect = Permutation({0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 11});
    CHECK(fixed_points(perfect) == std::vector<std::int64_t>{0, 11});
}

TEST_CASE("order") {
    CHECK(order(Permutation::identity(7)) == 1);
    CHECK(order(from_cycles({{1, 4, 6}, {2, 8, 9, 3}, {5, 10, 7}}, 12)) == 12);
    CHECK(order(from_cycles({{3, 6}, {4, 7}, {5, 8}}, 12)) == 2);
}

TEST_CASE("inverse of a composition, randomized") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const auto degree = 2 + static_cast<std::int64_t>(rng() % 99);
        const auto f = random_perm(degree, rng);
        const auto g = random_perm(degree, rng);
        REQUIRE(inverse(compose(f, g)) == compose(inverse(g), inverse(f)));
        REQUIRE(compose(f, inverse(f)).is_identity());
    }
}

TEST_CASE("cycle string parsing") {
    CHECK(parse_cycles("()", 5, true).is_identity());
    CHECK(parse_cycles("", 5, true).is_identity());
    CHECK(parse_cycles("(1 3)", 3, true) == from_cycles({{0, 2}}, 3));
    CHECK(parse_cycles("(1,3)(2)", 3, true) == from_cycles({{0, 2}}, 3));
    CHECK(parse_cycles("(0 2)", 3, false) == from_cycles({{0, 2}}, 3));
    CHECK(parse_cycles("(1 2 3)", 3, true) == Permutation({1, 2, 0}));

    CHECK_THROWS_AS(parse_cycles("(1 3", 3, true), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("1 3", 3, true), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1 4)", 3, true), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(0 1)", 3, true), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(x)", 3, true), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3, true), std::invalid_argument);
}

TEST_CASE("symmetric group enumeration") {
    const auto s3 = symmetric_group(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front().is_identity());
    for (std::size_t i = 1; i < s3.size(); ++i) CHECK(s3[i - 1] < s3[i]);
    CHECK(symmetric_group(1).size() == 1);
    CHECK_THROWS_AS(symmetric_group(11), limit_error);
}
