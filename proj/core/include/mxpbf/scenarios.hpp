#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mxpbf/matrix.hpp"
#include "mxpbf/rng.hpp"

namespace mxpbf {

enum class ScenarioKind { kMeanH0, kMeanH1R, kMeanH1M, kCovH0, kCovH1R, kCovH1M };

/// Sparse/dense refers to the precision matrix Omega_0 for mean scenarios and
/// to Sigma_01 for covariance scenarios.
enum class CovarianceStructure { kSparse, kDense };

/// Declarative description of one simulation setting. `signal` is the mean
/// shift mu for mean scenarios and the magnitude rho for covariance
/// scenarios; it is ignored under the H0 kinds.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kMeanH0;
  std::size_t n = 100;  // per population
  std::size_t p = 100;
  double signal = 0.0;
  CovarianceStructure structure = CovarianceStructure::kSparse;
  std::uint64_t seed = 0;

  bool is_mean() const;
  bool is_null() const;
  ScenarioKind null_kind() const;

  /// Preset names look like "cov-h1r-sparse" (family-hypothesis-structure).
  static ScenarioSpec from_preset(std::string_view name);
  std::string preset_name() const;

  /// Flat key=value config lines (kind, structure, n, p, signal, seed).
  std::string to_key_values() const;
  static ScenarioSpec from_key_values(std::string_view text);
};

/// Admissible signal-magnitude grids per kind (the published simulation
/// designs); empty for the H0 kinds.
std::span<const double> signal_grid(ScenarioKind kind);

struct MeanTruth {
  std::vector<double> mu1, mu2;
  SquareMatrix omega0;  // realized precision matrix (after the PD correction)
  SquareMatrix sigma0;
  SquareMatrix chol_sigma0;
  std::vector<std::size_t> signal_support;  // columns with planted mean shift
};

struct CovTruth {
  SquareMatrix sigma01, sigma02;
  SquareMatrix chol1, chol2;
  std::vector<std::pair<std::size_t, std::size_t>> signal_support;  // lower-tri (i > j)
};

struct GroundTruth {
  std::variant<MeanTruth, CovTruth> value;

  bool is_mean() const { return std::holds_alternative<MeanTruth>(value); }
  const MeanTruth& mean() const { return std::get<MeanTruth>(value); }
  const CovTruth& cov() const { return std::get<CovTruth>(value); }
};

/// Builds mu_01, mu_02 and Sigma_0 = Omega_0^{-1} per the sparse/dense
/// precision recipes (unit diagonal, planted 0.3 off-diagonals, positive
/// definite correction by adding (-lambda_min + 1e-3) I when needed).
GroundTruth build_mean_truth(const ScenarioSpec& spec, Rng& rng);

/// Builds Sigma_01, Sigma_02 per the sparse/dense covariance recipes and the
/// rare (five planted lower-triangular entries) or many (rank-one u u^T)
/// signal patterns, with the joint diagonal correction when either matrix is
/// not positive definite.
GroundTruth build_cov_truth(const ScenarioSpec& spec, Rng& rng);

/// Samples the two populations (n rows each) from the realized truth. The
/// populations draw from substreams derived as rng.derive(0) / rng.derive(1),
/// so output depends only on the stream key, never on generation order.
std::pair<SampleMatrix, SampleMatrix> generate_dataset(const GroundTruth& truth,
                                                       const ScenarioSpec& spec, Rng& rng);

/// Smallest eigenvalue of a symmetric matrix to 1e-6 relative accuracy, via
/// Householder tridiagonalization and Sturm-sequence bisection (inverse-free).
double smallest_eigenvalue(const SquareMatrix& m);

}  // namespace mxpbf
