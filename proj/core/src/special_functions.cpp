#include "mxpbf/special_functions.hpp"

#include <cmath>

#include "mxpbf/errors.hpp"

namespace mxpbf {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// Lanczos coefficients for g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double log_gamma_lanczos(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    a += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + 7.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InvalidInputError("log_gamma: requires finite x > 0");
  }
  if (x < 0.5) {
    // Reflection keeps full accuracy near 0: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kLogPi - std::log(std::sin(M_PI * x)) - log_gamma_lanczos(1.0 - x);
  }
  return log_gamma_lanczos(x);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / M_SQRT2); }

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / M_SQRT2); }

}  // namespace mxpbf
