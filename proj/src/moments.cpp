#include "sedge/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "sedge/special.hpp"

namespace sedge {

namespace {

constexpr double kResidualTol = 1e-8;
constexpr int kMaxBisectIter = 200;

}  // namespace

double sample_moment(std::span<const double> data, double r) {
    if (data.empty()) {
        throw std::invalid_argument("sample_moment: empty sample");
    }
    double acc = 0.0;
    if (r == 1.0) {
        for (double z : data) acc += z;
    } else if (r == 0.5) {
        for (double z : data) acc += std::sqrt(z);
    } else {
        for (double z : data) acc += std::pow(z, r);
    }
    return acc / static_cast<double>(data.size());
}

MomentPair sample_moments(std::span<const double> data) {
    if (data.empty()) {
        throw std::invalid_argument("sample_moments: empty sample");
    }
    double s1 = 0.0, sh = 0.0;
    for (double z : data) {
        s1 += z;
        sh += std::sqrt(z);
    }
    const double n = static_cast<double>(data.size());
    return {s1 / n, sh / n, data.size()};
}

double alpha_equation_residual(double alpha, const MomentPair& m, double looks) {
    // Both sides of the moment-ratio equation in logs; Gamma(-a)/Gamma(-a-1)
    // collapses to (-a-1) on the left.
    const double lhs = std::log(m.m1) + std::log(-alpha - 1.0);
    const double rhs = 2.0 * std::log(m.m_half) +
                       2.0 * (log_gamma(-alpha) - log_gamma(-alpha - 0.5)) +
                       2.0 * log_gamma(looks) + std::log(looks) -
                       2.0 * log_gamma(looks + 0.5);
    return lhs - rhs;
}

std::optional<double> solve_alpha(const MomentPair& m, double looks,
                                  const AlphaBracket& bracket) {
    if (!(m.m1 > 0.0) || !(m.m_half > 0.0)) {
        return std::nullopt;
    }
    if (m.m_half * m.m_half > m.m1 * (1.0 + 1e-12)) {
        throw std::invalid_argument(
            "solve_alpha: m_half^2 > m1 is impossible for a real sample");
    }
    if (!(bracket.lo < bracket.hi) || !(bracket.hi < -1.0)) {
        throw std::invalid_argument("solve_alpha: invalid bracket");
    }

    double lo = bracket.lo;
    double hi = bracket.hi;
    double g_lo = alpha_equation_residual(lo, m, looks);
    double g_hi = alpha_equation_residual(hi, m, looks);
    if (g_lo == 0.0) return lo;
    if (g_hi == 0.0) return hi;
    if ((g_lo > 0.0) == (g_hi > 0.0)) {
        return std::nullopt;  // no sign change: root outside the bracket
    }

    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < kMaxBisectIter; ++iter) {
        mid = 0.5 * (lo + hi);
        const double g_mid = alpha_equation_residual(mid, m, looks);
        if (std::abs(g_mid) < kResidualTol || hi - lo < 1e-13 * std::abs(lo)) {
            return mid;
        }
        if ((g_mid > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return mid;
}

double estimate_gamma(double alpha_hat, double m1, double looks) {
    if (!(alpha_hat < -1.0)) {
        throw std::domain_error("estimate_gamma: requires alpha_hat < -1");
    }
    return m1 * std::exp(std::log(looks) + log_gamma(-alpha_hat) + log_gamma(looks) -
                         log_gamma(-alpha_hat - 1.0) - log_gamma(looks + 1.0));
}

ParamEstimate estimate_params(std::span<const double> data, double looks,
                              const AlphaBracket& bracket, std::size_t n_min) {
    if (data.size() < n_min) {
        throw std::invalid_argument("estimate_params: sample smaller than n_min");
    }
    const MomentPair m = sample_moments(data);
    if (!(m.m1 > 0.0) || !(m.m_half > 0.0)) {
        // all-zero sample; nothing to fit
        return {bracket.lo, 0.0, false};
    }
    if (auto root = solve_alpha(m, looks, bracket)) {
        return {*root, estimate_gamma(*root, m.m1, looks), true};
    }
    // No root: clamp to the bracket end where the residual is nearer zero.
    const double g_lo = std::abs(alpha_equation_residual(bracket.lo, m, looks));
    const double g_hi = std::abs(alpha_equation_residual(bracket.hi, m, looks));
    const double clamped = g_lo <= g_hi ? bracket.lo : bracket.hi;
    return {clamped, estimate_gamma(clamped, m.m1, looks), false};
}

}  // namespace sedge
