#include "mxpbf/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "mxpbf/cholesky.hpp"
#include "mxpbf/errors.hpp"
#include "mxpbf/mvn.hpp"

namespace mxpbf {

namespace {

constexpr std::array<double, 10> kMeanRareGrid = {0.2, 0.25, 0.3, 0.35, 0.4,
                                                  0.5, 0.6,  0.8, 1.0,  1.5};
constexpr std::array<double, 10> kMeanManyGrid = {0.025, 0.05, 0.1, 0.15, 0.2,
                                                  0.25,  0.3,  0.4, 0.5,  0.6};
constexpr std::array<double, 6> kCovRareGrid = {0.5, 0.8, 1.5, 3.0, 6.0, 15.0};
constexpr std::array<double, 6> kCovManyGrid = {0.2, 0.3, 0.5, 0.7, 1.0, 1.5};

// ---- symmetric tridiagonalization + Sturm bisection ------------------------

void householder_tridiag(SquareMatrix a, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = a.dim();
  d.assign(n, 0.0);
  e.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> u(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double sigma2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) sigma2 += a(i, k) * a(i, k);
    if (sigma2 == 0.0) {
      e[k] = 0.0;
      continue;
    }
    const double x0 = a(k + 1, k);
    const double alpha = x0 >= 0.0 ? -std::sqrt(sigma2) : std::sqrt(sigma2);
    e[k] = alpha;
    // Householder vector u = x - alpha e1 on indices k+1..n-1.
    double unorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      u[i] = a(i, k);
      if (i == k + 1) u[i] -= alpha;
      unorm2 += u[i] * u[i];
    }
    if (unorm2 == 0.0) continue;
    // w = B u on the trailing block, then rank-two update B -= u q^T + q u^T.
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * u[j];
      w[i] = s;
    }
    double uw = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) uw += u[i] * w[i];
    const double beta = 2.0 / unorm2;
    for (std::size_t i = k + 1; i < n; ++i) {
      w[i] = beta * (w[i] - 0.5 * beta * uw * u[i]);  // q
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      for (std::size_t i = k + 1; i < n; ++i) {
        a(i, j) -= u[i] * w[j] + w[i] * u[j];
      }
    }
    a(k + 1, k) = alpha;
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  if (n >= 2) e[n - 2] = a(n - 1, n - 2);
}

// Number of eigenvalues of the tridiagonal (d, e) strictly below sigma.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e, double sigma,
                        double pivmin) {
  std::size_t count = 0;
  double q = d[0] - sigma;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - sigma - e[i - 1] * e[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// ---- selection helpers ------------------------------------------------------

// k distinct values from [0, bound) by partial Fisher-Yates; returned in
// selection order.
std::vector<std::size_t> sample_distinct(Rng& rng, std::size_t bound, std::size_t k) {
  std::vector<std::size_t> idx(bound);
  for (std::size_t i = 0; i < bound; ++i) idx[i] = i;
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t r = t + rng.uniform_below(bound - t);
    std::swap(idx[t], idx[r]);
    out.push_back(idx[t]);
  }
  return out;
}

// Strictly-lower-triangular pair for a flat index t in [0, p(p-1)/2):
// pairs enumerate as (1,0), (2,0), (2,1), (3,0), ...
std::pair<std::size_t, std::size_t> decode_lower_pair(std::size_t t) {
  auto i = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(t))) / 2.0);
  while (i * (i - 1) / 2 > t) --i;
  while ((i + 1) * i / 2 <= t) ++i;
  return {i, t - i * (i - 1) / 2};
}

std::vector<std::pair<std::size_t, std::size_t>> sample_lower_pairs(Rng& rng, std::size_t p,
                                                                    std::size_t k) {
  const std::size_t total = p * (p - 1) / 2;
  if (k > total) {
    throw InvalidInputError("scenario: more planted pairs than off-diagonal positions");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(k);
  for (std::size_t t : sample_distinct(rng, total, k)) pairs.push_back(decode_lower_pair(t));
  return pairs;
}

std::size_t planted_pair_count(std::size_t p, double fraction) {
  const double total = static_cast<double>(p) * static_cast<double>(p - 1) / 2.0;
  return static_cast<std::size_t>(std::llround(fraction * total));
}

void require_signal(const ScenarioSpec& spec) {
  if (!spec.is_null() && !(spec.signal > 0.0)) {
    throw InvalidInputError("scenario: alternative kinds need signal > 0");
  }
}

}  // namespace

// ---- ScenarioSpec -----------------------------------------------------------

bool ScenarioSpec::is_mean() const {
  return kind == ScenarioKind::kMeanH0 || kind == ScenarioKind::kMeanH1R ||
         kind == ScenarioKind::kMeanH1M;
}

bool ScenarioSpec::is_null() const {
  return kind == ScenarioKind::kMeanH0 || kind == ScenarioKind::kCovH0;
}

ScenarioKind ScenarioSpec::null_kind() const {
  return is_mean() ? ScenarioKind::kMeanH0 : ScenarioKind::kCovH0;
}

namespace {

const char* kind_token(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::kMeanH0: return "mean-h0";
    case ScenarioKind::kMeanH1R: return "mean-h1r";
    case ScenarioKind::kMeanH1M: return "mean-h1m";
    case ScenarioKind::kCovH0: return "cov-h0";
    case ScenarioKind::kCovH1R: return "cov-h1r";
    case ScenarioKind::kCovH1M: return "cov-h1m";
  }
  return "";
}

ScenarioKind parse_kind(std::string_view s) {
  for (ScenarioKind k : {ScenarioKind::kMeanH0, ScenarioKind::kMeanH1R, ScenarioKind::kMeanH1M,
                         ScenarioKind::kCovH0, ScenarioKind::kCovH1R, ScenarioKind::kCovH1M}) {
    if (s == kind_token(k)) return k;
  }
  throw InvalidInputError("scenario: unknown kind '" + std::string(s) + "'");
}

}  // namespace

ScenarioSpec ScenarioSpec::from_preset(std::string_view name) {
  const std::size_t cut = name.rfind('-');
  if (cut == std::string_view::npos) {
    throw InvalidInputError("scenario: preset names look like 'cov-h1r-sparse'");
  }
  const std::string_view structure = name.substr(cut + 1);
  ScenarioSpec spec;
  spec.kind = parse_kind(name.substr(0, cut));
  if (structure == "sparse") {
    spec.structure = CovarianceStructure::kSparse;
  } else if (structure == "dense") {
    spec.structure = CovarianceStructure::kDense;
  } else {
    throw InvalidInputError("scenario: structure must be 'sparse' or 'dense'");
  }
  return spec;
}

std::string ScenarioSpec::preset_name() const {
  return std::string(kind_token(kind)) + "-" +
         (structure == CovarianceStructure::kSparse ? "sparse" : "dense");
}

std::string ScenarioSpec::to_key_values() const {
  std::ostringstream os;
  os << "kind=" << kind_token(kind) << "\n"
     << "structure=" << (structure == CovarianceStructure::kSparse ? "sparse" : "dense") << "\n"
     << "n=" << n << "\n"
     << "p=" << p << "\n";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", signal);
  os << "signal=" << buf << "\n"
     << "seed=" << seed << "\n";
  return os.str();
}

ScenarioSpec ScenarioSpec::from_key_values(std::string_view text) {
  ScenarioSpec spec;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidInputError("scenario config: expected key=value, got '" + line + "'");
    }
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "kind") {
      spec.kind = parse_kind(val);
    } else if (key == "structure") {
      spec.structure = val == "dense" ? CovarianceStructure::kDense : CovarianceStructure::kSparse;
      if (val != "dense" && val != "sparse") {
        throw InvalidInputError("scenario config: structure must be sparse or dense");
      }
    } else if (key == "n") {
      spec.n = std::stoull(val);
    } else if (key == "p") {
      spec.p = std::stoull(val);
    } else if (key == "signal") {
      spec.signal = std::stod(val);
    } else if (key == "seed") {
      spec.seed = std::stoull(val);
    } else {
      throw InvalidInputError("scenario config: unknown key '" + key + "'");
    }
  }
  return spec;
}

std::span<const double> signal_grid(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kMeanH1R: return kMeanRareGrid;
    case ScenarioKind::kMeanH1M: return kMeanManyGrid;
    case ScenarioKind::kCovH1R: return kCovRareGrid;
    case ScenarioKind::kCovH1M: return kCovManyGrid;
    default: return {};
  }
}

// ---- truth builders ---------------------------------------------------------

GroundTruth build_mean_truth(const ScenarioSpec& spec, Rng& rng) {
  if (!spec.is_mean()) {
    throw InvalidInputError("build_mean_truth: not a mean scenario");
  }
  require_signal(spec);
  const std::size_t p = spec.p;
  if (p < 1) throw InvalidInputError("build_mean_truth: p must be >= 1");

  // Structure draws first, so H0 and H1 specs share Sigma_0 given one stream.
  const double fraction = spec.structure == CovarianceStructure::kSparse ? 0.01 : 0.40;
  SquareMatrix omega = SquareMatrix::identity(p);
  for (auto [i, j] : sample_lower_pairs(rng, p, planted_pair_count(p, fraction))) {
    omega(i, j) = 0.3;
    omega(j, i) = 0.3;
  }
  const double lmin = smallest_eigenvalue(omega);
  if (lmin <= 0.0) {
    omega.add_to_diagonal(-lmin + 1e-3);
  }

  MeanTruth truth;
  const SquareMatrix chol_omega = cholesky(omega);
  truth.sigma0 = cholesky_inverse(chol_omega);
  truth.chol_sigma0 = cholesky(truth.sigma0);
  truth.omega0 = std::move(omega);
  truth.mu1.assign(p, 0.0);
  truth.mu2.assign(p, 0.0);

  if (spec.kind != ScenarioKind::kMeanH0) {
    const std::size_t n0 = spec.kind == ScenarioKind::kMeanH1R ? 5 : p / 2;
    if (n0 > p || n0 == 0) {
      throw InvalidInputError("build_mean_truth: signal count exceeds p");
    }
    truth.signal_support = sample_distinct(rng, p, n0);
    std::sort(truth.signal_support.begin(), truth.signal_support.end());
    for (std::size_t j : truth.signal_support) truth.mu2[j] = spec.signal;
  }
  return {std::move(truth)};
}

GroundTruth build_cov_truth(const ScenarioSpec& spec, Rng& rng) {
  if (spec.is_mean()) {
    throw InvalidInputError("build_cov_truth: not a covariance scenario");
  }
  require_signal(spec);
  const std::size_t p = spec.p;
  if (p < 2) throw InvalidInputError("build_cov_truth: p must be >= 2");

  CovTruth truth;
  truth.sigma01 = SquareMatrix(p);

  if (spec.structure == CovarianceStructure::kSparse) {
    // Delta = Delta_1 + (|lambda_min(Delta_1)| + 0.05) I; Sigma_01 = D^1/2 Delta D^1/2.
    SquareMatrix delta(p);
    for (auto [i, j] : sample_lower_pairs(rng, p, planted_pair_count(p, 0.05))) {
      delta(i, j) = 0.5;
      delta(j, i) = 0.5;
    }
    const double shift = std::abs(smallest_eigenvalue(delta)) + 0.05;
    delta.add_to_diagonal(shift);
    std::vector<double> droot(p);
    for (std::size_t j = 0; j < p; ++j) droot[j] = std::sqrt(rng.uniform(0.5, 2.5));
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < p; ++i) truth.sigma01(i, j) = droot[i] * droot[j] * delta(i, j);
    }
  } else {
    // Sigma_01 = O Delta O with delta_ij = (-1)^{i+j} 0.4^{|i-j|^{1/10}}.
    std::vector<double> omega(p);
    for (std::size_t j = 0; j < p; ++j) omega[j] = rng.uniform(1.0, 5.0);
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < p; ++i) {
        const double gap = std::abs(static_cast<double>(i) - static_cast<double>(j));
        const double dij = gap == 0.0 ? 1.0 : std::pow(0.4, std::pow(gap, 0.1));
        const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
        truth.sigma01(i, j) = omega[i] * omega[j] * sign * dij;
      }
    }
  }

  truth.sigma02 = truth.sigma01;
  if (spec.kind == ScenarioKind::kCovH1R) {
    truth.signal_support = sample_lower_pairs(rng, p, 5);
    std::vector<double> values(5);
    for (double& v : values) v = rng.uniform(0.0, spec.signal);
    for (std::size_t t = 0; t < 5; ++t) {
      const auto [i, j] = truth.signal_support[t];
      truth.sigma02(i, j) += values[t];
      truth.sigma02(j, i) += values[t];
    }
  } else if (spec.kind == ScenarioKind::kCovH1M) {
    std::vector<double> u(p);
    for (double& v : u) v = rng.uniform(0.0, spec.signal);
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < p; ++i) truth.sigma02(i, j) += u[i] * u[j];
    }
  }

  // Joint correction: if either matrix fails positive definiteness, add the
  // same delta_1 I to both.
  const double l1 = smallest_eigenvalue(truth.sigma01);
  const double l2 = spec.kind == ScenarioKind::kCovH0 ? l1 : smallest_eigenvalue(truth.sigma02);
  const double lmin = std::min(l1, l2);
  if (lmin <= 0.0) {
    const double delta1 = std::abs(lmin) + 0.05;
    truth.sigma01.add_to_diagonal(delta1);
    truth.sigma02.add_to_diagonal(delta1);
  }
  truth.chol1 = cholesky(truth.sigma01);
  truth.chol2 = spec.kind == ScenarioKind::kCovH0 ? truth.chol1 : cholesky(truth.sigma02);
  return {std::move(truth)};
}

std::pair<SampleMatrix, SampleMatrix> generate_dataset(const GroundTruth& truth,
                                                       const ScenarioSpec& spec, Rng& rng) {
  if (spec.n < 1) throw InvalidInputError("generate_dataset: n must be >= 1");
  Rng rng_x = rng.derive(0);
  Rng rng_y = rng.derive(1);
  if (truth.is_mean()) {
    const MeanTruth& t = truth.mean();
    return {sample_mvn(rng_x, t.mu1, t.chol_sigma0, spec.n),
            sample_mvn(rng_y, t.mu2, t.chol_sigma0, spec.n)};
  }
  const CovTruth& t = truth.cov();
  const std::vector<double> zero(t.sigma01.dim(), 0.0);
  return {sample_mvn(rng_x, zero, t.chol1, spec.n), sample_mvn(rng_y, zero, t.chol2, spec.n)};
}

double smallest_eigenvalue(const SquareMatrix& m) {
  const std::size_t p = m.dim();
  if (p == 0) throw InvalidInputError("smallest_eigenvalue: empty matrix");
  const double scale = m.max_abs();
  if (m.max_asymmetry() > 1e-10 * std::max(scale, 1.0)) {
    throw InvalidInputError("smallest_eigenvalue: matrix is not symmetric within tolerance");
  }
  if (p == 1) return m(0, 0);

  std::vector<double> d, e;
  householder_tridiag(m, d, e);

  // Gershgorin bounds on the tridiagonal spectrum.
  double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < p; ++i) {
    const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < p ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double span = std::max(hi - lo, 1e-300);
  const double pivmin = 1e-300 + 1e-30 * span;
  const double tol = 1e-9 * std::max({std::abs(lo), std::abs(hi), 1e-12});

  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(d, e, mid, pivmin) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (++iterations > 4096) {
      throw NumericalError("smallest_eigenvalue: bisection failed to converge (interval [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "])");
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mxpbf
