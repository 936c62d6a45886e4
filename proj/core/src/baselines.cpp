#include "mxpbf/baselines.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "mxpbf/column_stats.hpp"
#include "mxpbf/errors.hpp"
#include "mxpbf/parallel.hpp"
#include "mxpbf/special_functions.hpp"

namespace mxpbf {

namespace {

void check_pair(const SampleMatrix& x, const SampleMatrix& y, std::size_t min_rows,
                const char* who) {
  if (x.cols() != y.cols()) {
    throw InvalidInputError(std::string(who) + ": column count mismatch");
  }
  if (x.rows() < min_rows || y.rows() < min_rows) {
    throw InvalidInputError(std::string(who) + ": too few observations");
  }
  if (!x.all_finite() || !y.all_finite()) {
    throw InvalidInputError(std::string(who) + ": non-finite entries");
  }
}

// Row-major copy of a sample matrix with column means removed (centered) or
// kept (raw); rows become contiguous for the Gram passes below.
std::vector<double> row_major_rows(const SampleMatrix& m, bool center) {
  const std::size_t n = m.rows(), p = m.cols();
  std::vector<double> out(n * p);
  for (std::size_t j = 0; j < p; ++j) {
    auto col = m.column(j);
    double mean = 0.0;
    if (center) {
      for (double v : col) mean += v;
      mean /= static_cast<double>(n);
    }
    for (std::size_t i = 0; i < n; ++i) out[i * p + j] = col[i] - mean;
  }
  return out;
}

double row_dot(const std::vector<double>& rows, std::size_t p, std::size_t a, std::size_t b) {
  const double* ra = rows.data() + a * p;
  const double* rb = rows.data() + b * p;
  double s = 0.0;
  for (std::size_t k = 0; k < p; ++k) s += ra[k] * rb[k];
  return s;
}

// sum over all ordered row pairs (a, b) of (w_a . w_b)^2, within one block.
double gram_square_sum(const std::vector<double>& rows, std::size_t n, std::size_t p) {
  double s = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const double d = row_dot(rows, p, a, b);
      s += (a == b ? 1.0 : 2.0) * d * d;
    }
  }
  return s;
}

// sum over cross pairs (a in first block, b in second) of (u_a . v_b)^2.
double gram_square_sum_cross(const std::vector<double>& ra, std::size_t na,
                             const std::vector<double>& rb, std::size_t nb, std::size_t p) {
  double s = 0.0;
  for (std::size_t a = 0; a < na; ++a) {
    const double* u = ra.data() + a * p;
    for (std::size_t b = 0; b < nb; ++b) {
      const double* v = rb.data() + b * p;
      double d = 0.0;
      for (std::size_t k = 0; k < p; ++k) d += u[k] * v[k];
      s += d * d;
    }
  }
  return s;
}

double sum_row_norms(const std::vector<double>& rows, std::size_t n, std::size_t p) {
  double s = 0.0;
  for (std::size_t a = 0; a < n; ++a) s += row_dot(rows, p, a, a);
  return s;
}

}  // namespace

FreqTestResult bs_mean_test(const SampleMatrix& x, const SampleMatrix& y) {
  check_pair(x, y, 2, "bs_mean_test");
  const std::size_t n1 = x.rows(), n2 = y.rows(), p = x.cols();
  const double nn = static_cast<double>(n1 + n2 - 2);
  if (nn < 3.0) {
    throw InvalidInputError("bs_mean_test: requires n1 + n2 - 2 >= 3");
  }
  const double tau = 1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2);

  double diff2 = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    const double d = column_summary(x.column(j)).mean - column_summary(y.column(j)).mean;
    diff2 += d * d;
  }

  // Pooled covariance S (divisor n1+n2-2) enters only through its traces,
  // both computable from the stacked centered rows.
  std::vector<double> wx = row_major_rows(x, true);
  std::vector<double> wy = row_major_rows(y, true);
  std::vector<double> w = wx;
  w.insert(w.end(), wy.begin(), wy.end());
  const std::size_t ntot = n1 + n2;
  const double tr_s = sum_row_norms(w, ntot, p) / nn;
  const double tr_s2 = gram_square_sum(w, ntot, p) / (nn * nn);

  const double b2 = nn * nn / ((nn + 2.0) * (nn - 1.0)) * (tr_s2 - tr_s * tr_s / nn);
  const double var = 2.0 * (nn + 1.0) / nn * tau * tau * b2;
  if (!(var > 0.0)) {
    throw DegenerateColumnError("bs_mean_test: zero variance estimate");
  }
  const double z = (diff2 - tau * tr_s) / std::sqrt(var);
  return {z, normal_upper_tail(z), FreqMethod::kBS};
}

FreqTestResult sd_mean_test(const SampleMatrix& x, const SampleMatrix& y) {
  check_pair(x, y, 2, "sd_mean_test");
  const std::size_t n1 = x.rows(), n2 = y.rows(), p = x.cols();
  const double nn = static_cast<double>(n1 + n2 - 2);
  if (nn < 3.0) {
    throw InvalidInputError("sd_mean_test: requires n1 + n2 - 2 >= 3");
  }

  std::vector<double> sjj(p);
  double q = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    const ColumnSummary sx = column_summary(x.column(j));
    const ColumnSummary sy = column_summary(y.column(j));
    sjj[j] = (sx.css + sy.css) / nn;
    if (!(sjj[j] > 0.0)) {
      throw DegenerateColumnError("sd_mean_test: constant column");
    }
    const double d = sx.mean - sy.mean;
    q += d * d / sjj[j];
  }
  q *= static_cast<double>(n1) * static_cast<double>(n2) / static_cast<double>(n1 + n2);

  // tr(R^2) from pooled centered columns.
  std::vector<double> wx = row_major_rows(x, true);
  std::vector<double> wy = row_major_rows(y, true);
  double tr_r2 = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = j; k < p; ++k) {
      double s = 0.0;
      for (std::size_t a = 0; a < n1; ++a) s += wx[a * p + j] * wx[a * p + k];
      for (std::size_t a = 0; a < n2; ++a) s += wy[a * p + j] * wy[a * p + k];
      const double r = (s / nn) / std::sqrt(sjj[j] * sjj[k]);
      tr_r2 += (j == k ? 1.0 : 2.0) * r * r;
    }
  }

  const double dp = static_cast<double>(p);
  const double c_pn = 1.0 + tr_r2 / std::pow(dp, 1.5);
  const double var = 2.0 * (tr_r2 - dp * dp / nn) * c_pn;
  if (!(var > 0.0)) {
    throw DegenerateColumnError("sd_mean_test: zero variance estimate");
  }
  const double z = (q - nn * dp / (nn - 2.0)) / std::sqrt(var);
  return {z, normal_upper_tail(z), FreqMethod::kSD};
}

FreqTestResult schott_cov_test(const SampleMatrix& x, const SampleMatrix& y) {
  check_pair(x, y, 3, "schott_cov_test");
  const std::size_t n1 = x.rows(), n2 = y.rows(), p = x.cols();
  const double e1 = static_cast<double>(n1 - 1);
  const double e2 = static_cast<double>(n2 - 1);
  const double e = e1 + e2;

  std::vector<double> wx = row_major_rows(x, true);
  std::vector<double> wy = row_major_rows(y, true);
  const double tr_s1 = sum_row_norms(wx, n1, p) / e1;
  const double tr_s2 = sum_row_norms(wy, n2, p) / e2;
  const double tr_s1s1 = gram_square_sum(wx, n1, p) / (e1 * e1);
  const double tr_s2s2 = gram_square_sum(wy, n2, p) / (e2 * e2);
  const double tr_s1s2 = gram_square_sum_cross(wx, n1, wy, n2, p) / (e1 * e2);

  const double t = tr_s1s1 + tr_s2s2 - 2.0 * tr_s1s2;

  const double tr_pl = (e1 * tr_s1 + e2 * tr_s2) / e;
  const double tr_pl2 = (e1 * e1 * tr_s1s1 + e2 * e2 * tr_s2s2 + 2.0 * e1 * e2 * tr_s1s2) / (e * e);
  const double a2 = e * e / ((e - 1.0) * (e + 2.0)) * (tr_pl2 - tr_pl * tr_pl / e);
  if (!(a2 > 0.0)) {
    throw DegenerateColumnError("schott_cov_test: zero tr(Sigma^2) estimate");
  }
  const double b2 = tr_pl * tr_pl - 2.0 * a2 / e;  // unbiased (tr Sigma)^2
  const double inv = 1.0 / e1 + 1.0 / e2;
  const double center = inv * (a2 + b2);
  const double z = (t - center) / (2.0 * inv * a2);
  return {z, normal_upper_tail(z), FreqMethod::kSchott};
}

FreqTestResult lc_cov_test(const SampleMatrix& x, const SampleMatrix& y) {
  check_pair(x, y, 2, "lc_cov_test");
  const std::size_t n1 = x.rows(), n2 = y.rows(), p = x.cols();

  // Raw (uncentered) rows: the model has zero means and the biased version
  // keeps only the two-index pair sums.
  std::vector<double> rx = row_major_rows(x, false);
  std::vector<double> ry = row_major_rows(y, false);

  auto pair_sum = [&](const std::vector<double>& rows, std::size_t n) {
    double s = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const double d = row_dot(rows, p, a, b);
        s += 2.0 * d * d;
      }
    }
    return s / (static_cast<double>(n) * static_cast<double>(n - 1));
  };

  const double a1 = pair_sum(rx, n1);
  const double a2 = pair_sum(ry, n2);
  const double c =
      gram_square_sum_cross(rx, n1, ry, n2, p) / (static_cast<double>(n1) * static_cast<double>(n2));

  const double t = a1 + a2 - 2.0 * c;
  const double tr2_pooled =
      (static_cast<double>(n1) * a1 + static_cast<double>(n2) * a2) / static_cast<double>(n1 + n2);
  if (!(tr2_pooled > 0.0)) {
    throw DegenerateColumnError("lc_cov_test: zero tr(Sigma^2) estimate");
  }
  const double sd0 = 2.0 * (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2)) * tr2_pooled;
  const double z = t / sd0;
  return {z, normal_upper_tail(z), FreqMethod::kLC};
}

FreqTestResult clx_cov_test(const SampleMatrix& x, const SampleMatrix& y, int threads) {
  check_pair(x, y, 4, "clx_cov_test");
  const std::size_t n1 = x.rows(), n2 = y.rows(), p = x.cols();
  if (p < 2) {
    throw InvalidInputError("clx_cov_test: needs p >= 2 columns");
  }

  SampleMatrix cx = x, cy = y;
  cx.center_columns();
  cy.center_columns();
  const double dn1 = static_cast<double>(n1), dn2 = static_cast<double>(n2);

  const int t = resolve_thread_count(threads);
  std::vector<double> local_max(static_cast<std::size_t>(std::max(1, t)),
                                -std::numeric_limits<double>::infinity());

  parallel_for_blocks(p, t, [&](std::size_t begin, std::size_t end, int worker) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = begin; j < end; ++j) {
      const auto cxj = cx.column(j);
      const auto cyj = cy.column(j);
      for (std::size_t i = 0; i <= j; ++i) {
        const auto cxi = cx.column(i);
        const auto cyi = cy.column(i);
        double s1 = 0.0, m1 = 0.0;
        for (std::size_t r = 0; r < n1; ++r) {
          const double prod = cxi[r] * cxj[r];
          s1 += prod;
          m1 += prod * prod;
        }
        s1 /= dn1;
        const double th1 = m1 / dn1 - s1 * s1;
        double s2 = 0.0, m2 = 0.0;
        for (std::size_t r = 0; r < n2; ++r) {
          const double prod = cyi[r] * cyj[r];
          s2 += prod;
          m2 += prod * prod;
        }
        s2 /= dn2;
        const double th2 = m2 / dn2 - s2 * s2;
        const double den = th1 / dn1 + th2 / dn2;
        if (!(den > 0.0)) continue;  // degenerate pair: skip
        const double d = s1 - s2;
        const double stat = d * d / den;
        if (stat > best) best = stat;
      }
    }
    local_max[static_cast<std::size_t>(worker)] =
        std::max(local_max[static_cast<std::size_t>(worker)], best);
  });

  double m = -std::numeric_limits<double>::infinity();
  for (double v : local_max) m = std::max(m, v);
  if (!std::isfinite(m)) {
    throw DegenerateColumnError("clx_cov_test: every pair is degenerate");
  }
  const double dp = static_cast<double>(p);
  const double tstat = m - 4.0 * std::log(dp) + std::log(std::log(dp));
  // P(M - 4 log p + log log p <= t) -> exp(-(8 pi)^{-1/2} e^{-t/2})
  const double pv = -std::expm1(-std::exp(-tstat / 2.0) / std::sqrt(8.0 * M_PI));
  return {m, pv, FreqMethod::kCLXCov};
}

}  // namespace mxpbf
