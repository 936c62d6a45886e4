#pragma once

namespace mxpbf {

/// Natural log of the Gamma function for x > 0 (Lanczos approximation,
/// g = 7, 9 coefficients). Throws InvalidInputError for x <= 0 or non-finite x.
double log_gamma(double x);

/// Standard normal CDF.
double normal_cdf(double z);

/// Upper-tail standard normal probability P(Z > z).
double normal_upper_tail(double z);

}  // namespace mxpbf
