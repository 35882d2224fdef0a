#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "sedge/rank_stats.hpp"
#include "sedge/rng.hpp"
#include "test_util.hpp"

using namespace sedge;

TEST_CASE("midranks: hand cases") {
    CHECK(midranks(std::vector<double>{3, 1, 2}) == std::vector<double>{3, 1, 2});
    CHECK(midranks(std::vector<double>{1, 1, 2}) == std::vector<double>{1.5, 1.5, 3});
    CHECK(midranks(std::vector<double>{5}) == std::vector<double>{1});
    CHECK(midranks(std::vector<double>{2, 2, 2, 2}) ==
          std::vector<double>{2.5, 2.5, 2.5, 2.5});
    CHECK_THROWS_AS(midranks({}), std::invalid_argument);
}

TEST_CASE("midranks: sum is exactly N(N+1)/2 and matches the counting oracle") {
    RngStream rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform01() * 30);
        const auto values = testutil::random_values(rng, n, trial % 2 == 0);
        const auto ranks = midranks(values);
        const auto expected = oracle::midranks_by_counting(values);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(ranks[i] == expected[i]);  // half-integers: exact
            sum += ranks[i];
        }
        CHECK(sum == static_cast<double>(n * (n + 1)) / 2.0);
    }
}

TEST_CASE("rank_two_samples keeps the split position") {
    const std::vector<double> x{4.0, 1.0}, y{2.0, 3.0};
    const RankedSample rs = rank_two_samples(x, y);
    CHECK(rs.split == 2);
    CHECK(rs.total == 4);
    CHECK(rs.ranks == std::vector<double>{4, 1, 2, 3});
}

TEST_CASE("mann_whitney_t1: hand cases") {
    // no ties: T = 4, null mean 5, variance 5/3
    const auto a = mann_whitney_t1(std::vector<double>{1, 3}, std::vector<double>{2, 4});
    REQUIRE(a.has_value());
    CHECK(*a == doctest::Approx(-1.0 / std::sqrt(5.0 / 3.0)).epsilon(1e-12));

    // rank sums balance exactly
    const auto b = mann_whitney_t1(std::vector<double>{1, 4}, std::vector<double>{2, 3});
    REQUIRE(b.has_value());
    CHECK(std::abs(*b) <= 1e-14);

    // midranks [2,2] and [2,4]: T = 4, variance 1
    const auto c = mann_whitney_t1(std::vector<double>{1, 1}, std::vector<double>{1, 2});
    REQUIRE(c.has_value());
    CHECK(*c == doctest::Approx(-1.0).epsilon(1e-12));

    CHECK_FALSE(mann_whitney_t1(std::vector<double>{2, 2},
                                std::vector<double>{2, 2, 2}).has_value());
    CHECK_THROWS_AS(mann_whitney_t1({}, std::vector<double>{1.0}),
                    std::invalid_argument);
}

TEST_CASE("kruskal_wallis: hand cases") {
    const auto a = kruskal_wallis({{1, 2}, {3, 4}});
    REQUIRE(a.has_value());
    CHECK(*a == doctest::Approx(2.4).epsilon(1e-12));

    const auto b = kruskal_wallis({{1, 4}, {2, 3}});
    REQUIRE(b.has_value());
    CHECK(std::abs(*b) <= 1e-14);

    // Tie-corrected form; value confirmed against the counting oracle and
    // the squared standardized Mann-Whitney statistic (T_k = T1^2 at k=2).
    const auto c = kruskal_wallis({{1, 1}, {2, 2}});
    REQUIRE(c.has_value());
    CHECK(*c == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(oracle::kruskal_wallis({{1, 1}, {2, 2}}) ==
          doctest::Approx(3.0).epsilon(1e-12));
    const auto t1 = mann_whitney_t1(std::vector<double>{1, 1},
                                    std::vector<double>{2, 2});
    REQUIRE(t1.has_value());
    CHECK(*c == doctest::Approx((*t1) * (*t1)).epsilon(1e-12));

    CHECK_FALSE(kruskal_wallis({{7, 7}, {7, 7, 7}}).has_value());
    CHECK_THROWS_AS(kruskal_wallis({{1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(kruskal_wallis({{1.0}, {}}), std::invalid_argument);
}

TEST_CASE("kruskal_wallis supports k > 2") {
    const auto t = kruskal_wallis({{1, 5}, {2, 6}, {3, 4, 7}});
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(oracle::kruskal_wallis({{1, 5}, {2, 6}, {3, 4, 7}}))
                    .epsilon(1e-12));
}

TEST_CASE("squared_ranks_tv: hand cases") {
    // U = {1,1}, V = {2,2}: midranks 1.5 1.5 3.5 3.5, T = 4.5
    const auto a =
        squared_ranks_tv(std::vector<double>{0, 2}, std::vector<double>{0, 4});
    REQUIRE(a.has_value());
    CHECK(*a == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));

    // identical deviation multisets: numerator exactly zero
    const auto b = squared_ranks_tv(std::vector<double>{1, 2, 3},
                                    std::vector<double>{3, 1, 2});
    REQUIRE(b.has_value());
    CHECK(*b == 0.0);

    // same rank structure as the first case
    const auto c =
        squared_ranks_tv(std::vector<double>{-1, 1}, std::vector<double>{-3, 3});
    REQUIRE(c.has_value());
    CHECK(*c == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));

    // all four deviations tie: no variance information
    CHECK_FALSE(squared_ranks_tv(std::vector<double>{0, 2},
                                 std::vector<double>{5, 7}).has_value());
    CHECK_THROWS_AS(squared_ranks_tv(std::vector<double>{1.0},
                                     std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("tpe_e: hand cases") {
    CHECK(tpe_e(std::vector<double>{1, 2}, std::vector<double>{3, 4}) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(tpe_e(std::vector<double>{1, 4}, std::vector<double>{2, 3}) ==
          doctest::Approx(2.5).epsilon(1e-14));
    CHECK(tpe_e(std::vector<double>{7}, std::vector<double>{7}) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK_THROWS_AS(tpe_e({}, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("all four statistics match the counting oracle on random samples") {
    RngStream rng(9090);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const bool ties = trial % 2 == 0;
        const auto size = [&] {
            return 2 + static_cast<std::size_t>(rng.uniform01() * 14);
        };
        const auto x = testutil::random_values(rng, size(), ties);
        const auto y = testutil::random_values(rng, size(), ties);

        const auto t1 = mann_whitney_t1(x, y);
        if (t1) {
            CHECK(*t1 == doctest::Approx(oracle::mann_whitney_t1(x, y)).epsilon(1e-10));
        }
        const auto kw = kruskal_wallis({x, y});
        if (kw) {
            CHECK(*kw == doctest::Approx(oracle::kruskal_wallis({x, y})).epsilon(1e-10));
        }
        if (trial % 3 == 0) {
            const auto z = testutil::random_values(rng, size(), ties);
            const auto kw3 = kruskal_wallis({x, y, z});
            if (kw3) {
                CHECK(*kw3 ==
                      doctest::Approx(oracle::kruskal_wallis({x, y, z})).epsilon(1e-10));
            }
        }
        const auto tv = squared_ranks_tv(x, y);
        if (tv) {
            CHECK(*tv ==
                  doctest::Approx(oracle::squared_ranks_tv(x, y)).epsilon(1e-10));
        }
        CHECK(tpe_e(x, y) == doctest::Approx(oracle::tpe_e(x, y)).epsilon(1e-10));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("no ties, k=2: Kruskal-Wallis equals the squared Mann-Whitney T1") {
    // Brute force over every 2-partition of {1..8}; the finite-N factor
    // between the two normalizations turns out to be exactly 1.
    const std::vector<double> pool{1, 2, 3, 4, 5, 6, 7, 8};
    int partitions = 0;
    for (unsigned mask = 1; mask < 255; ++mask) {
        std::vector<double> x, y;
        for (int i = 0; i < 8; ++i) {
            ((mask >> i) & 1u ? x : y).push_back(pool[i]);
        }
        if (x.empty() || y.empty()) continue;
        const auto t1 = mann_whitney_t1(x, y);
        const auto kw = kruskal_wallis({x, y});
        REQUIRE(t1.has_value());
        REQUIRE(kw.has_value());
        CHECK(*kw == doctest::Approx((*t1) * (*t1)).epsilon(1e-11));
        ++partitions;
    }
    CHECK(partitions == 254);
}
