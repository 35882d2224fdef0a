#pragma once

#include <cstddef>
#include <vector>

#include "sedge/gi0.hpp"
#include "sedge/rng.hpp"

namespace sedge {

/// One Gamma(shape, rate 1) variate, Marsaglia-Tsang rejection with the
/// shape < 1 boost. Exact (non-approximate) for every shape > 0.
double draw_gamma(double shape, RngStream& rng);

/// n i.i.d. speckle draws Y ~ Gamma(L, L): unit mean, variance 1/L.
std::vector<double> sample_gamma_speckle(double looks, std::size_t n, RngStream& rng);

/// n i.i.d. backscatter draws X ~ Gamma^-1(alpha, gamma), realized as
/// gamma / W with W ~ Gamma(-alpha, 1). Density
/// x^(alpha-1) exp(-gamma/x) / (gamma^alpha Gamma(-alpha)).
std::vector<double> sample_reciprocal_gamma(double alpha, double gamma,
                                            std::size_t n, RngStream& rng);

/// n i.i.d. intensity returns Z = X*Y under the multiplicative model;
/// one backscatter draw and one speckle draw per pixel, in that order.
std::vector<double> sample_gi0(const GI0Params& p, std::size_t n, RngStream& rng);

}  // namespace sedge
