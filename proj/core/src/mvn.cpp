#include "mxpbf/mvn.hpp"

#include <vector>

#include "mxpbf/errors.hpp"

namespace mxpbf {

SampleMatrix sample_mvn(Rng& rng, std::span<const double> mu, const SquareMatrix& chol_lower,
                        std::size_t count) {
  const std::size_t p = chol_lower.dim();
  if (mu.size() != p || p == 0) {
    throw InvalidInputError("sample_mvn: mean / factor dimension mismatch");
  }
  if (count < 1) {
    throw InvalidInputError("sample_mvn: count must be >= 1");
  }
  SampleMatrix out(count, p);
  std::vector<double> z(p);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t k = 0; k < p; ++k) z[k] = rng.normal();
    for (std::size_t j = 0; j < p; ++j) {
      double s = mu[j];
      // Row j of L times z; L is lower triangular.
      for (std::size_t k = 0; k <= j; ++k) s += chol_lower(j, k) * z[k];
      out(r, j) = s;
    }
  }
  return out;
}

}  // namespace mxpbf
