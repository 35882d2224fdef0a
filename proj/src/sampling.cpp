#include "sedge/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace sedge {

double draw_gamma(double shape, RngStream& rng) {
    if (!(shape > 0.0)) {
        throw std::invalid_argument("draw_gamma: shape must be > 0");
    }
    if (shape < 1.0) {
        // Boost: if G ~ Gamma(shape+1) and U ~ U(0,1) then G*U^(1/shape)
        // is Gamma(shape).
        const double g = draw_gamma(shape + 1.0, rng);
        return g * std::pow(rng.uniform01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double z, v;
        do {
            z = rng.normal01();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform01();
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

std::vector<double> sample_gamma_speckle(double looks, std::size_t n, RngStream& rng) {
    if (!(looks >= 1.0)) {
        throw std::invalid_argument("sample_gamma_speckle: looks must be >= 1");
    }
    std::vector<double> out(n);
    for (auto& y : out) {
        y = draw_gamma(looks, rng) / looks;
    }
    return out;
}

std::vector<double> sample_reciprocal_gamma(double alpha, double gamma,
                                            std::size_t n, RngStream& rng) {
    if (!(alpha < 0.0) || !(gamma > 0.0)) {
        throw std::invalid_argument(
            "sample_reciprocal_gamma: requires alpha < 0 and gamma > 0");
    }
    std::vector<double> out(n);
    for (auto& x : out) {
        x = gamma / draw_gamma(-alpha, rng);
    }
    return out;
}

std::vector<double> sample_gi0(const GI0Params& p, std::size_t n, RngStream& rng) {
    std::vector<double> out(n);
    for (auto& z : out) {
        const double x = p.gamma / draw_gamma(-p.alpha, rng);
        const double y = draw_gamma(p.looks, rng) / p.looks;
        z = x * y;
    }
    return out;
}

}  // namespace sedge
