#include "mxpbf/cholesky.hpp"

#include <cmath>

#include "mxpbf/errors.hpp"

namespace mxpbf {

SquareMatrix cholesky(const SquareMatrix& m) {
  const std::size_t p = m.dim();
  if (p == 0) {
    throw InvalidInputError("cholesky: empty matrix");
  }
  const double scale = m.max_abs();
  if (m.max_asymmetry() > 1e-10 * std::max(scale, 1.0)) {
    throw InvalidInputError("cholesky: matrix is not symmetric within tolerance");
  }
  SquareMatrix l(p);
  for (std::size_t j = 0; j < p; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) {
      throw NotPositiveDefiniteError("cholesky: non-positive pivot", j);
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < p; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

SquareMatrix cholesky_inverse(const SquareMatrix& chol_lower) {
  const std::size_t p = chol_lower.dim();
  SquareMatrix inv(p);
  std::vector<double> w(p);
  for (std::size_t col = 0; col < p; ++col) {
    // Forward solve L w = e_col.
    for (std::size_t i = 0; i < p; ++i) {
      double s = (i == col) ? 1.0 : 0.0;
      for (std::size_t k = 0; k < i; ++k) s -= chol_lower(i, k) * w[k];
      w[i] = s / chol_lower(i, i);
    }
    // Back solve L^T x = w.
    for (std::size_t ii = p; ii-- > 0;) {
      double s = w[ii];
      for (std::size_t k = ii + 1; k < p; ++k) s -= chol_lower(k, ii) * inv(k, col);
      inv(ii, col) = s / chol_lower(ii, ii);
    }
  }
  // Symmetrize away round-off.
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = j + 1; i < p; ++i) {
      const double v = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = v;
      inv(j, i) = v;
    }
  }
  return inv;
}

}  // namespace mxpbf
