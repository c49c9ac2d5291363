#include <catch2/catch_amalgamated.hpp>

#include "shufmat/mixed_radix.hpp"

using namespace shufmat;

namespace {

BranchIndices basis(std::initializer_list<std::int64_t> ns) {
    return BranchIndices(std::vector<std::int64_t>(ns));
}

} // namespace

TEST_CASE("weight vector") {
    CHECK(weight_vector(basis({4, 3, 2})) == WeightVector{6, 2, 1});
    CHECK(weight_vector(basis({2, 2})) == WeightVector{2, 1});
    CHECK(weight_vector(basis({2, 2, 3})) == WeightVector{6, 3, 1});
}

TEST_CASE("encode") {
    CHECK(encode(DigitWord(basis({4, 3, 2}), {2, 1, 1})) == 15);
    CHECK(encode(DigitWord(basis({5, 3, 2}), {0, 0, 0})) == 0);
    CHECK(encode(DigitWord(basis({2, 2, 3}), {1, 1, 2})) == 11);
}

TEST_CASE("decode") {
    CHECK(decode(15, basis({4, 3, 2})).digits == std::vector<std::int64_t>{2, 1, 1});
    CHECK(decode(0, basis({2, 2, 3})).digits == std::vector<std::int64_t>{0, 0, 0});

    // Independent oracle: scan all words of the basis for the one encoding to 7.
    const auto b = basis({2, 2, 3});
    std::vector<std::int64_t> found;
    for (std::int64_t d0 = 0; d0 < 2; ++d0)
        for (std::int64_t d1 = 0; d1 < 2; ++d1)
            for (std::int64_t d2 = 0; d2 < 3; ++d2)
                if (encode(DigitWord(b, {d0, d1, d2})) == 7) found = {d0, d1, d2};
    CHECK(found == std::vector<std::int64_t>{1, 0, 1});
    CHECK(decode(7, b).digits == found);
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(basis({2}), std::invalid_argument);
    CHECK_THROWS_AS(basis({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(basis({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(DigitWord(basis({2, 2, 3}), {0, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(DigitWord(basis({2, 2, 3}), {0, -1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(DigitWord(basis({2, 2, 3}), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(decode(12, basis({2, 2, 3})), std::out_of_range);
    CHECK_THROWS_AS(decode(-1, basis({2, 2, 3})), std::out_of_range);
    CHECK_THROWS_AS(BranchIndices({2, 2, 2}, 7), limit_error);
}

TEST_CASE("round trip and lexicographic order agreement") {
    std::vector<std::vector<std::int64_t>> bases;
    for (std::int64_t a = 2; a <= 9; ++a)
        for (std::int64_t b = 2; b <= 9; ++b) {
            bases.push_back({a, b});
            for (std::int64_t c = 2; c <= 9; ++c)
                if (a * b * c <= 10'000) bases.push_back({a, b, c});
        }
    bases.push_back({10, 10, 10, 10});
    bases.push_back(std::vector<std::int64_t>(13, 2)); // 2^13 = 8192

    for (const auto& ns : bases) {
        const BranchIndices b(ns);
        std::vector<std::int64_t> previous;
        for (std::int64_t x = 0; x < b.total(); ++x) {
            const auto word = decode(x, b);
            REQUIRE(encode(word) == x);
            if (x > 0) REQUIRE(previous < word.digits); // strict lexicographic increase
            previous = word.digits;
        }
    }
}
