// Independent reference implementations used only by the test suites.
// Everything here is deliberately written from the textbook formulas,
// by different routes than the library (counting instead of sorting,
// literal normalizations instead of factored ones), so agreement is
// meaningful.
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sedge/gi0.hpp"

namespace oracle {

/// Midrank by pair counting: 1 + #{smaller} + #{equal others}/2.
std::vector<double> midranks_by_counting(std::span<const double> values);

double mann_whitney_t1(std::span<const double> x, std::span<const double> y);
double kruskal_wallis(const std::vector<std::vector<double>>& samples);
double squared_ranks_tv(std::span<const double> x, std::span<const double> y);
double tpe_e(std::span<const double> x, std::span<const double> y);

/// Adaptive Simpson quadrature to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

/// Integral of the G0 density over [0, z_max] where z_max is chosen so
/// the mean-based Markov bound puts less than `tail_mass` beyond it.
double gi0_density_mass(const sedge::GI0Params& p, double tail_mass);

/// Quadrature CDF of the G0 law evaluated at each point of a sorted
/// sample (cumulative segment-by-segment integration).
std::vector<double> gi0_cdf_at(const sedge::GI0Params& p,
                               std::span<const double> sorted_points);

/// Two-sided Kolmogorov-Smirnov distance of a sorted sample against CDF
/// values aligned with it.
double ks_statistic(std::span<const double> cdf_at_sorted);

/// Asymptotic 1% critical value for the KS statistic.
double ks_critical_1pct(std::size_t n);

}  // namespace oracle
