#pragma once

#include <span>
#include <vector>

namespace mxpbf {

/// ROC curve from paired H0/H1 statistic samples. Points are ordered, start
/// at (0,0), end at (1,1), and are non-decreasing in both coordinates; `auc`
/// is their trapezoidal integral, which equals the tie-corrected
/// Mann-Whitney concordance probability.
struct RocCurve {
  std::vector<std::pair<double, double>> points;  // (fpr, tpr)
  double auc = 0.0;
  std::size_t n_h0 = 0;
  std::size_t n_h1 = 0;
};

/// Sweeps thresholds over the pooled unique statistic values:
/// fpr(t) = frac(h0 > t), tpr(t) = frac(h1 > t). +inf samples reject at every
/// threshold and -inf samples never do; NaN is rejected as invalid input.
RocCurve roc_from_samples(std::span<const double> h0_stats, std::span<const double> h1_stats);

}  // namespace mxpbf
