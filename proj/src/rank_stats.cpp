#include "sedge/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sedge {

namespace {

double sample_mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) {
        throw std::invalid_argument("midranks: empty input");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        // positions i..j-1 carry integer ranks i+1..j
        const double rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j;
    }
    return ranks;
}

RankedSample rank_two_samples(std::span<const double> x, std::span<const double> y) {
    std::vector<double> combined;
    combined.reserve(x.size() + y.size());
    combined.insert(combined.end(), x.begin(), x.end());
    combined.insert(combined.end(), y.begin(), y.end());
    return {midranks(combined), x.size(), combined.size()};
}

std::optional<double> mann_whitney_t1(std::span<const double> x,
                                      std::span<const double> y) {
    if (x.empty() || y.empty()) {
        throw std::invalid_argument("mann_whitney_t1: both samples must be nonempty");
    }
    const RankedSample rs = rank_two_samples(x, y);
    const double n = static_cast<double>(x.size());
    const double m = static_cast<double>(y.size());
    const double N = static_cast<double>(rs.total);

    double t = 0.0, sum_r2 = 0.0;
    for (std::size_t i = 0; i < rs.total; ++i) {
        if (i < rs.split) t += rs.ranks[i];
        sum_r2 += rs.ranks[i] * rs.ranks[i];
    }
    // n*m/(N(N-1)) * (sum R^2 - N(N+1)^2/4); the parenthesis is exact in
    // double (quarter-integers), so an all-tied sample yields exactly 0.
    const double spread = sum_r2 - N * (N + 1.0) * (N + 1.0) / 4.0;
    if (spread <= 0.0) {
        return std::nullopt;
    }
    const double var = n * m / (N * (N - 1.0)) * spread;
    return (t - n * (N + 1.0) / 2.0) / std::sqrt(var);
}

std::optional<double> kruskal_wallis(const std::vector<std::vector<double>>& samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("kruskal_wallis: needs at least two samples");
    }
    std::vector<double> combined;
    for (const auto& s : samples) {
        if (s.empty()) {
            throw std::invalid_argument("kruskal_wallis: empty sample");
        }
        combined.insert(combined.end(), s.begin(), s.end());
    }
    const std::vector<double> ranks = midranks(combined);
    const double N = static_cast<double>(combined.size());

    double sum_r2 = 0.0;
    for (double r : ranks) sum_r2 += r * r;

    double rank_sq_over_n = 0.0;
    std::size_t offset = 0;
    for (const auto& s : samples) {
        double ri = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) ri += ranks[offset + i];
        rank_sq_over_n += ri * ri / static_cast<double>(s.size());
        offset += s.size();
    }

    const double quarter = N * (N + 1.0) * (N + 1.0) / 4.0;
    const double no_tie_sum_r2 = N * (N + 1.0) * (2.0 * N + 1.0) / 6.0;
    if (sum_r2 == no_tie_sum_r2) {
        return 12.0 / (N * (N + 1.0)) * rank_sq_over_n - 3.0 * (N + 1.0);
    }
    const double s2 = (sum_r2 - quarter) / (N - 1.0);
    if (s2 <= 0.0) {
        return std::nullopt;
    }
    return (rank_sq_over_n - quarter) / s2;
}

std::optional<double> squared_ranks_tv(std::span<const double> x,
                                       std::span<const double> y) {
    if (x.size() < 2 || y.size() < 2) {
        throw std::invalid_argument(
            "squared_ranks_tv: each sample needs >= 2 observations");
    }
    const double mu1 = sample_mean(x), mu2 = sample_mean(y);
    std::vector<double> dev;
    dev.reserve(x.size() + y.size());
    for (double v : x) dev.push_back(std::abs(v - mu1));
    for (double v : y) dev.push_back(std::abs(v - mu2));

    const std::vector<double> ranks = midranks(dev);
    const auto [min_it, max_it] = std::minmax_element(ranks.begin(), ranks.end());
    if (*min_it == *max_it) {
        return std::nullopt;  // every deviation tied: null variance is zero
    }

    const double n = static_cast<double>(x.size());
    const double m = static_cast<double>(y.size());
    const double N = n + m;
    double t = 0.0, sum_r2 = 0.0, sum_r4 = 0.0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const double r2 = ranks[i] * ranks[i];
        if (i < x.size()) t += r2;
        sum_r2 += r2;
        sum_r4 += r2 * r2;
    }
    // T - n*mean(R^2) and the null variance, arranged so identical
    // deviation multisets give an exactly zero numerator.
    const double numer = (N * t - n * sum_r2) / N;
    const double var =
        n * m * (N * sum_r4 - sum_r2 * sum_r2) / (N * N * (N - 1.0));
    if (var <= 0.0) {
        return std::nullopt;
    }
    return numer / std::sqrt(var);
}

double tpe_e(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) {
        throw std::invalid_argument("tpe_e: both samples must be nonempty");
    }
    const RankedSample rs = rank_two_samples(x, y);
    double rx = 0.0, ry = 0.0;
    for (std::size_t i = 0; i < rs.total; ++i) {
        (i < rs.split ? rx : ry) += rs.ranks[i];
    }
    const double gap = std::abs(rx / static_cast<double>(x.size()) -
                                ry / static_cast<double>(y.size()));
    const double mu = (static_cast<double>(rs.total) + 1.0) / 2.0;
    return std::abs(gap - mu);
}

}  // namespace sedge
