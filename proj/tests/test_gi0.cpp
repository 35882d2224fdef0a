#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "sedge/gi0.hpp"
#include "sedge/special.hpp"

using namespace sedge;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("log_gamma matches libm lgamma to 13+ digits") {
    for (double x = 0.01; x < 0.5; x += 0.013) {
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    }
    for (double x = 0.5; x <= 60.0; x += 0.37) {
        const double want = std::lgamma(x);
        if (std::abs(want) < 1e-3) {
            CHECK(log_gamma(x) == doctest::Approx(want).epsilon(1e-10));
        } else {
            CHECK(log_gamma(x) == doctest::Approx(want).epsilon(1e-13));
        }
    }
}

TEST_CASE("log_gamma exact anchors") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
    CHECK(log_gamma(1.5) ==
          doctest::Approx(0.5 * std::log(M_PI) - std::log(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
}

TEST_CASE("GI0Params rejects out-of-domain values") {
    CHECK_NOTHROW(GI0Params(-2.0, 1.0, 1.0));
    CHECK_NOTHROW(GI0Params(-0.5, 3.0, 3.2));  // alpha < 0 is enough here
    CHECK_THROWS_AS(GI0Params(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GI0Params(1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GI0Params(-2.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GI0Params(-2.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GI0Params(-2.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("unit_mean_gamma: hand-simplified cases and the -alpha-1 identity") {
    CHECK(unit_mean_gamma(-2.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(unit_mean_gamma(-3.0, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(unit_mean_gamma(-2.0, 3.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(unit_mean_gamma(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(unit_mean_gamma(-0.5, 1.0), std::domain_error);

    for (double alpha : {-1.1, -1.5, -2.0, -3.0, -4.5, -8.0, -12.0, -20.0, -60.0}) {
        for (double looks : {1.0, 3.0, 3.2, 8.0}) {
            CHECK(unit_mean_gamma(alpha, looks) ==
                  doctest::Approx(-alpha - 1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("unit-mean scale really gives mean one") {
    for (double alpha : {-2.0, -6.0, -20.0}) {
        for (double looks : {1.0, 8.0}) {
            const GI0Params p(alpha, unit_mean_gamma(alpha, looks), looks);
            CHECK(gi0_moment(1.0, p) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("gi0_density closed-form anchor values") {
    // L = 1 gives f(0) = -alpha/gamma
    CHECK(gi0_density(0.0, {-2.0, 1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-12));
    // direct evaluation: 6*8 / (2*81)
    CHECK(gi0_density(1.0, {-3.0, 2.0, 1.0}) ==
          doctest::Approx(6.0 * 8.0 / (2.0 * 81.0)).epsilon(1e-12));
}

TEST_CASE("gi0_density integrates to one (quadrature oracle)") {
    for (double alpha : {-1.5, -3.0, -8.0, -20.0}) {
        for (double looks : {1.0, 3.0, 8.0}) {
            const GI0Params p(alpha, unit_mean_gamma(alpha, looks), looks);
            const double mass = oracle::gi0_density_mass(p, 1e-6);
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-5));
        }
    }
}

TEST_CASE("gi0_log_density agrees with the density and handles z = 0") {
    int checked = 0;
    for (double alpha : {-1.5, -2.0, -5.0, -13.0, -40.0}) {
        for (double looks : {1.0, 2.0, 3.2, 8.0}) {
            const GI0Params p(alpha, unit_mean_gamma(alpha, looks), looks);
            for (double z : {0.01, 0.3, 1.0, 4.0, 50.0}) {
                CHECK(std::exp(gi0_log_density(z, p)) ==
                      doctest::Approx(gi0_density(z, p)).epsilon(1e-12));
                ++checked;
            }
        }
    }
    CHECK(checked == 100);

    CHECK(gi0_log_density(0.0, {-2.0, 1.0, 1.0}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(gi0_log_density(0.0, {-2.0, 1.0, 3.0}) == -kInf);
    CHECK(gi0_density(0.0, {-2.0, 1.0, 3.0}) == 0.0);
    CHECK_THROWS_AS(gi0_log_density(-0.1, {-2.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("gi0_moment: finite values and the infinity marker") {
    CHECK(gi0_moment(1.0, {-2.0, 1.0, 5.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gi0_moment(2.0, {-1.5, 1.0, 1.0}) == kInf);
    CHECK(gi0_moment(0.5, {-2.0, 1.0, 1.0}) ==
          doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    CHECK(gi0_moment(2.0, {-2.0, 1.0, 1.0}) == kInf);  // boundary -alpha == r
    CHECK_THROWS_AS(gi0_moment(0.0, {-2.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("log-density tail is asymptotically linear in ln z with slope alpha-1") {
    for (double alpha : {-1.5, -3.0, -8.0}) {
        const GI0Params p(alpha, unit_mean_gamma(alpha, 3.0), 3.0);
        for (double z : {1e3, 1e4}) {
            const double h = 0.01;
            const double slope = (gi0_log_density(z * std::exp(h), p) -
                                  gi0_log_density(z * std::exp(-h), p)) /
                                 (2.0 * h);
            CHECK(std::abs(slope - (alpha - 1.0)) <= 0.05);
        }
    }
}
