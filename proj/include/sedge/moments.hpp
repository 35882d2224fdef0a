#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace sedge {

/// First and half-order sample moments of an intensity sample.
/// Jensen forces m_half^2 <= m1 for any real sample.
struct MomentPair {
    double m1;      // n^-1 sum z_i
    double m_half;  // n^-1 sum sqrt(z_i)
    std::size_t n;
};

/// Search interval for the roughness root. Beyond -60 the G0 law is
/// numerically indistinguishable from pure speckle at realistic sample
/// sizes; -1.01 keeps the first moment finite with a little margin.
struct AlphaBracket {
    double lo = -60.0;
    double hi = -1.01;
};

/// Method-of-moments fit of (alpha, gamma) with L known.
struct ParamEstimate {
    double alpha_hat;
    double gamma_hat;
    bool converged;  // false: no root in the bracket, alpha_hat clamped
};

/// r-th sample moment n^-1 sum z_i^r. Throws std::invalid_argument on
/// empty input.
double sample_moment(std::span<const double> data, double r);

/// m1 and m_half in one pass.
MomentPair sample_moments(std::span<const double> data);

/// Roughness estimate: root of the moment-ratio equation
///
///   m1 Gamma(-a)Gamma(L)L / (Gamma(-a-1)Gamma(L+1))
///     = m_half^2 Gamma(-a)^2 Gamma(L)^2 L / (Gamma(-a-1/2)^2 Gamma(L+1/2)^2)
///
/// solved by bisection on the log-form difference g(a), which is strictly
/// monotone on the bracket. Returns nullopt when g has no sign change
/// there (degenerate or implausible sample); |g| < 1e-8 at the returned
/// root otherwise.
std::optional<double> solve_alpha(const MomentPair& m, double looks,
                                  const AlphaBracket& bracket = {});

/// Log-form moment-ratio residual; exposed for diagnostics and tests.
double alpha_equation_residual(double alpha, const MomentPair& m, double looks);

/// Scale estimate from the first-moment equation,
///   gamma_hat = m1 L Gamma(-a)Gamma(L) / (Gamma(-a-1)Gamma(L+1)),
/// which reduces to m1 * (-a - 1). Throws std::domain_error for
/// alpha_hat >= -1.
double estimate_gamma(double alpha_hat, double m1, double looks);

/// Full (alpha, gamma) fit. On a no-root sample the estimate is clamped
/// to the bracket end where the residual is nearer zero and flagged
/// converged = false. Throws std::invalid_argument below n_min
/// observations.
ParamEstimate estimate_params(std::span<const double> data, double looks,
                              const AlphaBracket& bracket = {},
                              std::size_t n_min = 20);

}  // namespace sedge
