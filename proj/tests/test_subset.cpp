#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "ekr/subset.hpp"

using ekr::binom;
using ekr::Subset;

TEST_CASE("binomial table") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(64, 32) == 1832624140942590534ull);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-1, 0) == 0);
}

TEST_CASE("subset construction and validation") {
    const Subset s = Subset::of(5, {2, 4});
    CHECK(s.size() == 2);
    CHECK(s.contains(2));
    CHECK(!s.contains(3));
    CHECK(s.elements() == std::vector<int>{2, 4});
    CHECK(s == Subset(5, 0b01010));

    CHECK_THROWS_AS(Subset::of(5, {6}), ekr::RangeError);
    CHECK_THROWS_AS(Subset::of(5, {0}), ekr::RangeError);
    CHECK_THROWS_AS(Subset(0, 0), ekr::RangeError);
    CHECK_THROWS_AS(Subset(65, 0), ekr::RangeError);
    CHECK_THROWS_AS(Subset(3, 0b1000), ekr::RangeError);
    CHECK(Subset::full(64).size() == 64);
}

TEST_CASE("intersection_size") {
    CHECK(ekr::intersection_size(Subset::of(4, {1, 2, 3}), Subset::of(4, {2, 3, 4})) == 2);
    CHECK(ekr::intersection_size(Subset::of(4, {1, 2}), Subset::of(4, {3, 4})) == 0);
    CHECK(ekr::intersection_size(Subset::of(3, {1, 2, 3}), Subset::of(3, {1, 2, 3})) == 3);
    CHECK_THROWS_AS(ekr::intersection_size(Subset::of(4, {1}), Subset::of(5, {1})),
                    ekr::GroundMismatchError);
}

TEST_CASE("intersection_size symmetry and diagonal") {
    std::mt19937_64 gen(7);
    for (int iter = 0; iter < 200; ++iter) {
        const Subset a(10, gen() & 0x3FF);
        const Subset b(10, gen() & 0x3FF);
        CHECK(ekr::intersection_size(a, b) == ekr::intersection_size(b, a));
        CHECK(ekr::intersection_size(a, a) == a.size());
    }
}

TEST_CASE("complement_within") {
    const Subset window = Subset::of(5, {2, 3, 4, 5});
    CHECK(ekr::complement_within(Subset::of(5, {2, 3}), window) == Subset::of(5, {4, 5}));
    CHECK(ekr::complement_within(window, window) == Subset::empty(5));

    // window [2,7] inside ground set 7
    const Subset w7 = Subset::of(7, {2, 3, 4, 5, 6, 7});
    CHECK(ekr::complement_within(Subset::of(7, {2, 3, 4}), w7) == Subset::of(7, {5, 6, 7}));

    CHECK_THROWS_AS(ekr::complement_within(Subset::of(5, {1, 2}), window),
                    ekr::NotContainedError);
}

TEST_CASE("complement_within is an involution") {
    std::mt19937_64 gen(11);
    for (int iter = 0; iter < 200; ++iter) {
        const std::uint64_t w = gen() & 0xFFF;
        const Subset window(12, w);
        const Subset a(12, gen() & w);
        CHECK(ekr::complement_within(ekr::complement_within(a, window), window) == a);
    }
}

TEST_CASE("colex rank examples") {
    CHECK(ekr::colex_rank(Subset::of(4, {1, 2})) == 0);
    CHECK(ekr::colex_rank(Subset::of(4, {2, 3})) == 2);  // {1,2} < {1,3} < {2,3}
    CHECK(ekr::colex_rank(Subset::empty(4)) == 0);
}

TEST_CASE("colex unrank round trip, exhaustive for n <= 12") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            for (std::uint64_t r = 0; r < binom(n, k); ++r) {
                const Subset s = ekr::colex_unrank(n, k, r);
                REQUIRE(s.size() == k);
                REQUIRE(ekr::colex_rank(s) == r);
            }
    CHECK_THROWS_AS(ekr::colex_unrank(4, 2, 6), ekr::RangeError);
    CHECK_THROWS_AS(ekr::colex_unrank(4, 5, 0), ekr::RangeError);
}
