#pragma once

namespace sedge {

/// Parameters of the G0 intensity law for speckled (SAR) data.
///
/// The observed return Z is the product of two independent factors:
/// reciprocal-Gamma backscatter X ~ Gamma^-1(alpha, gamma) and unit-mean
/// Gamma speckle Y ~ Gamma(L, L). Z = X*Y then has density
///
///     f(z) = L^L Gamma(L-alpha) z^(L-1)
///            / (gamma^alpha Gamma(L) Gamma(-alpha) (gamma + L z)^(L-alpha))
///
/// for z > 0. alpha < 0 controls roughness (near 0: extremely
/// heterogeneous, e.g. urban; very negative: homogeneous, e.g. pasture),
/// gamma > 0 is scale, L >= 1 is the number of looks. L need not be an
/// integer.
struct GI0Params {
    double alpha;
    double gamma;
    double looks;

    /// Throws std::invalid_argument unless alpha < 0, gamma > 0, looks >= 1.
    GI0Params(double alpha, double gamma, double looks);
};

/// Scale gamma_{alpha,L} that makes the G0(alpha, gamma, L) mean equal 1.
///
/// Evaluates Gamma(-alpha)Gamma(L)L / (Gamma(-alpha-1)Gamma(L+1)), which
/// collapses algebraically to -alpha-1 for every L; the gamma-function
/// route is kept so it doubles as a consistency check on log_gamma.
/// Throws std::domain_error for alpha >= -1 (the mean does not exist).
double unit_mean_gamma(double alpha, double looks);

/// G0 density at z >= 0.
double gi0_density(double z, const GI0Params& p);

/// ln of the G0 density; -infinity where the density vanishes
/// (z == 0 with L > 1).
double gi0_log_density(double z, const GI0Params& p);

/// r-th noncentral moment, r > 0:
///     E[Z^r] = (gamma/L)^r Gamma(-alpha-r)Gamma(L+r) / (Gamma(-alpha)Gamma(L))
/// when -alpha > r, +infinity otherwise.
double gi0_moment(double r, const GI0Params& p);

}  // namespace sedge
