#pragma once

namespace sedge {

/// Natural log of the Gamma function for x > 0.
///
/// Lanczos approximation (g = 7, 9 terms), accurate to ~14 significant
/// digits over the argument range this library exercises (roughly 1e-2
/// to a few hundred). Arguments below 0.5 are lifted through the
/// recurrence lgamma(x) = lgamma(x + 1) - ln(x) so precision does not
/// collapse near the pole at zero.
double log_gamma(double x);

}  // namespace sedge
