#pragma once

#include <span>

namespace mxpbf {

/// Column mean and centered sum of squares (divisor-n convention: the
/// biased variance is css / n).
struct ColumnSummary {
  double mean = 0.0;
  double css = 0.0;
};

/// Through-the-origin least-squares regression of one column on another.
/// `slope` is <vi, vj> / ||vj||^2 and `residual_ms` is the divisor-n residual
/// mean square; `clamped` records that round-off produced a negative residual
/// that was clamped to zero.
struct PairRegression {
  double slope = 0.0;
  double residual_ms = 0.0;
  bool clamped = false;
};

/// Two-pass mean / centered sum of squares. Throws InvalidInputError on an
/// empty or non-finite vector.
ColumnSummary column_summary(std::span<const double> v);

/// Regression of vi on vj through the origin. Requires len >= 2 and
/// ||vj||^2 > 0 (throws DegenerateColumnError otherwise; callers decide the
/// skip policy).
PairRegression pair_regression(std::span<const double> vi, std::span<const double> vj);

}  // namespace mxpbf
