#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "ekr/family.hpp"

using ekr::make_family;
using ekr::Subset;
using ekr::UniformFamily;

TEST_CASE("make_family canonical order") {
    const UniformFamily f = make_family(3, 2, {{2, 3}, {1, 2}});
    REQUIRE(f.size() == 2);
    CHECK(f.at(0) == Subset::of(3, {1, 2}));  // colex: {1,2} < {2,3}
    CHECK(f.at(1) == Subset::of(3, {2, 3}));
}

TEST_CASE("make_family validation") {
    CHECK_THROWS_AS(make_family(4, 2, {{1, 2}, {1, 2}}), ekr::DuplicateError);
    CHECK_THROWS_AS(make_family(4, 3, {{1, 2}}), ekr::CardinalityError);
    CHECK_THROWS_AS(make_family(4, 2, {{1, 1}}), ekr::CardinalityError);
    CHECK_THROWS_AS(make_family(4, 2, {{1, 5}}), ekr::RangeError);
    CHECK_THROWS_AS(make_family(0, 0, {}), ekr::RangeError);
    CHECK_THROWS_AS(make_family(4, 5, {}), ekr::RangeError);
}

TEST_CASE("canonical form is idempotent") {
    const UniformFamily f = make_family(5, 2, {{4, 5}, {1, 3}, {2, 3}});
    std::vector<std::vector<int>> raw;
    for (std::size_t i = 0; i < f.size(); ++i) raw.push_back(f.at(i).elements());
    CHECK(make_family(5, 2, raw) == f);
}

TEST_CASE("is_intersecting") {
    CHECK(ekr::is_intersecting(make_family(3, 2, {{1, 2}, {1, 3}, {2, 3}})));
    CHECK(!ekr::is_intersecting(make_family(4, 2, {{1, 2}, {3, 4}})));
    CHECK(ekr::is_intersecting(UniformFamily(4, 2)));              // empty
    CHECK(ekr::is_intersecting(make_family(4, 2, {{1, 2}})));      // singleton
}

TEST_CASE("min_pairwise_intersection") {
    CHECK(ekr::min_pairwise_intersection(ekr::all_k_subsets(4, 3)) == 2);
    CHECK(ekr::min_pairwise_intersection(make_family(4, 2, {{1, 2}, {3, 4}})) == 0);
    // the pair ({1,2,5}, {1,3,4}) meets only in {1}
    CHECK(ekr::min_pairwise_intersection(
              make_family(5, 3, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}})) == 1);
    CHECK(!ekr::min_pairwise_intersection(make_family(4, 2, {{1, 2}})).has_value());
    CHECK(!ekr::min_pairwise_intersection(UniformFamily(4, 2)).has_value());
}

TEST_CASE("is_intersecting agrees with min_pairwise_intersection") {
    std::mt19937_64 gen(3);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 4 + static_cast<int>(gen() % 5);
        const int k = 2 + static_cast<int>(gen() % 2);
        if (k > n) continue;
        const auto all = ekr::all_k_subsets(n, k);
        std::vector<std::uint64_t> masks;
        for (std::uint64_t m : all.masks())
            if (gen() % 3 == 0) masks.push_back(m);
        const auto f = UniformFamily::from_canonical_masks(n, k, std::move(masks));
        const auto b = ekr::min_pairwise_intersection(f);
        CHECK(ekr::is_intersecting(f) == (!b.has_value() || *b >= 1));
    }
}

TEST_CASE("intersection_sizes") {
    CHECK(ekr::intersection_sizes(make_family(4, 2, {{1, 2}, {1, 3}, {1, 4}})) ==
          std::set<int>{1});
    CHECK(ekr::intersection_sizes(make_family(3, 2, {{1, 2}, {1, 3}, {2, 3}})) ==
          std::set<int>{1});
    CHECK(ekr::intersection_sizes(make_family(6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 5, 6}})) ==
          std::set<int>{1, 2});
    CHECK(ekr::intersection_sizes(make_family(4, 2, {{1, 2}})).empty());
}

TEST_CASE("all_k_subsets") {
    CHECK(ekr::all_k_subsets(4, 2).size() == 6);
    const auto f50 = ekr::all_k_subsets(5, 0);
    REQUIRE(f50.size() == 1);
    CHECK(f50.at(0) == Subset::empty(5));
    const auto f55 = ekr::all_k_subsets(5, 5);
    REQUIRE(f55.size() == 1);
    CHECK(f55.at(0) == Subset::full(5));
    CHECK_THROWS_AS(ekr::all_k_subsets(4, 5), ekr::RangeError);
    CHECK_THROWS_AS(ekr::all_k_subsets(4, -1), ekr::RangeError);

    // colex order is numeric mask order
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto f = ekr::all_k_subsets(n, k);
            REQUIRE(f.size() == ekr::binom(n, k));
            for (std::size_t i = 0; i < f.size(); ++i)
                REQUIRE(ekr::colex_rank(f.at(i)) == i);
        }
}

TEST_CASE("family text format round trip") {
    const UniformFamily f = make_family(5, 2, {{1, 2}, {1, 3}, {2, 3}});
    const std::string text = ekr::to_text(f);
    CHECK(text == "5 2\n1 2\n1 3\n2 3\n");
    CHECK(ekr::parse_family_text(text) == f);

    // parsing canonicalizes line order
    CHECK(ekr::parse_family_text("5 2\n2 3\n1 2\n1 3\n") == f);

    const UniformFamily empty_sets = make_family(5, 0, {{}});
    CHECK(ekr::to_text(empty_sets) == "5 0\n\n");
    CHECK(ekr::parse_family_text("5 0\n\n") == empty_sets);

    const UniformFamily none(4, 2);
    CHECK(ekr::to_text(none) == "4 2\n");
    CHECK(ekr::parse_family_text("4 2\n") == none);
}

TEST_CASE("family text format errors") {
    CHECK_THROWS_AS(ekr::parse_family_text(""), ekr::ParseError);
    CHECK_THROWS_AS(ekr::parse_family_text("5 2\n1 2"), ekr::ParseError);  // no final newline
    CHECK_THROWS_AS(ekr::parse_family_text("5\n"), ekr::ParseError);
    CHECK_THROWS_AS(ekr::parse_family_text("5 2 9\n"), ekr::ParseError);
    CHECK_THROWS_AS(ekr::parse_family_text("5 2\n1 x\n"), ekr::ParseError);
    CHECK_THROWS_AS(ekr::parse_family_text("5 2\n1 2 3\n"), ekr::CardinalityError);
    CHECK_THROWS_AS(ekr::parse_family_text("5 2\n1 6\n"), ekr::RangeError);
    CHECK_THROWS_AS(ekr::parse_family_text("5 2\n1 2\n1 2\n"), ekr::DuplicateError);
    CHECK_THROWS_AS(ekr::parse_family_text("65 2\n"), ekr::RangeError);
}

TEST_CASE("emitted families re-parse to equal values") {
    std::mt19937_64 gen(17);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 3 + static_cast<int>(gen() % 8);
        const int k = static_cast<int>(gen() % (n + 1));
        const auto all = ekr::all_k_subsets(n, k);
        std::vector<std::uint64_t> masks;
        for (std::uint64_t m : all.masks())
            if (gen() % 2 == 0) masks.push_back(m);
        const auto f = UniformFamily::from_canonical_masks(n, k, std::move(masks));
        CHECK(ekr::parse_family_text(ekr::to_text(f)) == f);
    }
}
