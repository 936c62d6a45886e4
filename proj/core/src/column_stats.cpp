#include "mxpbf/column_stats.hpp"

#include <cmath>

#include "mxpbf/errors.hpp"

namespace mxpbf {

ColumnSummary column_summary(std::span<const double> v) {
  if (v.empty()) {
    throw InvalidInputError("column_summary: empty vector");
  }
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw InvalidInputError("column_summary: non-finite entry");
    }
    sum += x;
  }
  const double mean = sum / static_cast<double>(v.size());
  double css = 0.0;
  for (double x : v) {
    const double d = x - mean;
    css += d * d;
  }
  return {mean, css};
}

PairRegression pair_regression(std::span<const double> vi, std::span<const double> vj) {
  if (vi.size() != vj.size() || vi.size() < 2) {
    throw InvalidInputError("pair_regression: vectors must share a length >= 2");
  }
  double dot = 0.0, nj = 0.0, ni = 0.0;
  for (std::size_t k = 0; k < vi.size(); ++k) {
    dot += vi[k] * vj[k];
    nj += vj[k] * vj[k];
    ni += vi[k] * vi[k];
  }
  if (nj <= 0.0) {
    throw DegenerateColumnError("pair_regression: regressor column has zero norm");
  }
  PairRegression out;
  out.slope = dot / nj;
  double rss = ni - dot * dot / nj;
  if (rss < 0.0) {
    rss = 0.0;
    out.clamped = true;
  }
  out.residual_ms = rss / static_cast<double>(vi.size());
  return out;
}

}  // namespace mxpbf
