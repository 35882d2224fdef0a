#include "sedge/special.hpp"

#include <cmath>
#include <stdexcept>

namespace sedge {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive");
    }
    if (x < 0.5) {
        return log_gamma(x + 1.0) - std::log(x);
    }
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + 7.5;  // z + g + 1/2
    return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace sedge
