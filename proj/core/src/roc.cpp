#include "mxpbf/roc.hpp"

#include <algorithm>
#include <cmath>

#include "mxpbf/errors.hpp"

namespace mxpbf {

RocCurve roc_from_samples(std::span<const double> h0_stats, std::span<const double> h1_stats) {
  if (h0_stats.empty() || h1_stats.empty()) {
    throw InvalidInputError("roc_from_samples: both samples must be non-empty");
  }
  for (double v : h0_stats) {
    if (std::isnan(v)) throw InvalidInputError("roc_from_samples: NaN statistic");
  }
  for (double v : h1_stats) {
    if (std::isnan(v)) throw InvalidInputError("roc_from_samples: NaN statistic");
  }

  std::vector<double> pooled;
  pooled.reserve(h0_stats.size() + h1_stats.size());
  pooled.insert(pooled.end(), h0_stats.begin(), h0_stats.end());
  pooled.insert(pooled.end(), h1_stats.begin(), h1_stats.end());
  std::sort(pooled.begin(), pooled.end(), std::greater<double>());
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());

  RocCurve curve;
  curve.n_h0 = h0_stats.size();
  curve.n_h1 = h1_stats.size();
  curve.points.reserve(pooled.size() + 2);
  curve.points.emplace_back(0.0, 0.0);
  const double d0 = static_cast<double>(h0_stats.size());
  const double d1 = static_cast<double>(h1_stats.size());
  for (double t : pooled) {
    std::size_t f = 0, tp = 0;
    for (double v : h0_stats) f += v > t ? 1 : 0;
    for (double v : h1_stats) tp += v > t ? 1 : 0;
    curve.points.emplace_back(static_cast<double>(f) / d0, static_cast<double>(tp) / d1);
  }
  curve.points.emplace_back(1.0, 1.0);

  double auc = 0.0;
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const auto& [x0, y0] = curve.points[k - 1];
    const auto& [x1, y1] = curve.points[k];
    auc += (x1 - x0) * 0.5 * (y0 + y1);
  }
  curve.auc = auc;
  return curve;
}

}  // namespace mxpbf
