#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sedge {

/// Ranks 1..N with ties resolved to midranks (each tied value gets the
/// mean of the integer ranks its group spans). The rank sum is always
/// exactly N(N+1)/2; midranks are half-integers, so sums of them are
/// exact in double.
std::vector<double> midranks(std::span<const double> values);

/// Midranks of the concatenation (x then y), remembering where x ends.
struct RankedSample {
    std::vector<double> ranks;
    std::size_t split;  // size of the first sample
    std::size_t total;  // N = n + m
};

RankedSample rank_two_samples(std::span<const double> x, std::span<const double> y);

/// Tie-corrected standardized Mann-Whitney rank-sum statistic
/// (Conover's T1): the rank sum of x, centered at n(N+1)/2 and scaled by
/// the null standard deviation computed from the realized (possibly
/// tied) ranks. Negative when x tends smaller. nullopt when every value
/// in the combined sample is identical.
std::optional<double> mann_whitney_t1(std::span<const double> x,
                                      std::span<const double> y);

/// Kruskal-Wallis statistic for k >= 2 samples. Uses the tie-corrected
/// form T = (sum R_i^2/n_i - N(N+1)^2/4) / S^2 whenever ties are
/// present and the no-tie simplification 12/(N(N+1)) sum R_i^2/n_i
/// - 3(N+1) otherwise; the two coincide without ties. nullopt when
/// S^2 = 0 (all values identical).
std::optional<double> kruskal_wallis(const std::vector<std::vector<double>>& samples);

/// Conover squared-ranks test statistic for equality of variances,
/// standardized for ties (Tv). Ranks the absolute deviations from the
/// respective sample means; needs at least two observations per side.
/// nullopt when all deviations are identical.
std::optional<double> squared_ranks_tv(std::span<const double> x,
                                       std::span<const double> y);

/// Rank-mean gap statistic E = | |mean rank of x - mean rank of y| - mu |
/// with mu = (N+1)/2 the mean rank of the combined sample. Small E marks
/// a candidate transition point. Note the quirk of the definition: E is
/// smallest when the rank-mean gap is closest to mu, so gaps are
/// rewarded only up to mu and penalized again beyond it.
double tpe_e(std::span<const double> x, std::span<const double> y);

}  // namespace sedge
