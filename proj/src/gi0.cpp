#include "sedge/gi0.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sedge/special.hpp"

namespace sedge {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GI0Params::GI0Params(double alpha_in, double gamma_in, double looks_in)
    : alpha(alpha_in), gamma(gamma_in), looks(looks_in) {
    if (!(alpha < 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("GI0Params: alpha must be finite and < 0, got " +
                                    std::to_string(alpha_in));
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("GI0Params: gamma must be finite and > 0, got " +
                                    std::to_string(gamma_in));
    }
    if (!(looks >= 1.0) || !std::isfinite(looks)) {
        throw std::invalid_argument("GI0Params: looks must be finite and >= 1, got " +
                                    std::to_string(looks_in));
    }
}

double unit_mean_gamma(double alpha, double looks) {
    if (!(alpha < -1.0)) {
        throw std::domain_error("unit_mean_gamma: requires alpha < -1");
    }
    if (!(looks >= 1.0)) {
        throw std::domain_error("unit_mean_gamma: requires looks >= 1");
    }
    return std::exp(log_gamma(-alpha) + log_gamma(looks) + std::log(looks) -
                    log_gamma(-alpha - 1.0) - log_gamma(looks + 1.0));
}

double gi0_log_density(double z, const GI0Params& p) {
    if (!(z >= 0.0)) {
        throw std::invalid_argument("gi0_log_density: z must be >= 0");
    }
    const double L = p.looks;
    if (z == 0.0 && L > 1.0) {
        return -kInf;  // z^(L-1) factor vanishes
    }
    double value = L * std::log(L) + log_gamma(L - p.alpha) -
                   p.alpha * std::log(p.gamma) - log_gamma(L) -
                   log_gamma(-p.alpha) -
                   (L - p.alpha) * std::log(p.gamma + L * z);
    if (L != 1.0) {
        value += (L - 1.0) * std::log(z);
    }
    return value;
}

double gi0_density(double z, const GI0Params& p) {
    return std::exp(gi0_log_density(z, p));
}

double gi0_moment(double r, const GI0Params& p) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("gi0_moment: order r must be > 0");
    }
    if (!(-p.alpha > r)) {
        return kInf;
    }
    return std::exp(r * (std::log(p.gamma) - std::log(p.looks)) +
                    log_gamma(-p.alpha - r) + log_gamma(p.looks + r) -
                    log_gamma(-p.alpha) - log_gamma(p.looks));
}

}  // namespace sedge
