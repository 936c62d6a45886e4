#include <doctest.h>

#include <cmath>
#include <set>

#include "mxpbf/cholesky.hpp"
#include "mxpbf/errors.hpp"
#include "mxpbf/mean_test.hpp"
#include "mxpbf/rng.hpp"
#include "mxpbf/scenarios.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mxpbf;

TEST_SUITE_BEGIN("scenarios");

TEST_CASE("smallest_eigenvalue trivial matrices") {
  CHECK(smallest_eigenvalue(SquareMatrix::identity(7)) == doctest::Approx(1.0).epsilon(1e-9));
  SquareMatrix d(3);
  d(0, 0) = 3.0;
  d(1, 1) = -2.0;
  d(2, 2) = 5.0;
  CHECK(smallest_eigenvalue(d) == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("smallest_eigenvalue matches the Jacobi oracle") {
  Rng rng(71);
  for (int rep = 0; rep < 5; ++rep) {
    const std::size_t p = 30;
    SquareMatrix m(p);
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        const double v = rng.normal();
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    const double got = smallest_eigenvalue(m);
    const double want = oracle::jacobi_eigenvalues(m).front();
    CHECK(testutil::rel_close(got, want, 1e-6));
  }
}

TEST_CASE("smallest_eigenvalue rejects asymmetric input") {
  SquareMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 0.5;
  CHECK_THROWS_AS(smallest_eigenvalue(m), InvalidInputError);
}

TEST_CASE("mean H0 truth has zero means") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kMeanH0;
  spec.p = 30;
  Rng rng(72);
  const GroundTruth truth = build_mean_truth(spec, rng);
  for (double v : truth.mean().mu1) CHECK(v == 0.0);
  for (double v : truth.mean().mu2) CHECK(v == 0.0);
  CHECK(truth.mean().signal_support.empty());
}

TEST_CASE("mean H1R plants exactly five signals") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kMeanH1R;
  spec.p = 100;
  spec.signal = 1.5;
  Rng rng(73);
  const GroundTruth truth = build_mean_truth(spec, rng);
  const MeanTruth& t = truth.mean();
  CHECK(t.signal_support.size() == 5);
  std::size_t nonzero = 0;
  for (std::size_t j = 0; j < 100; ++j) {
    if (t.mu2[j] != 0.0) {
      ++nonzero;
      CHECK(t.mu2[j] == 1.5);
    }
  }
  CHECK(nonzero == 5);
}

TEST_CASE("mean H1M plants p/2 signals") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kMeanH1M;
  spec.p = 40;
  spec.signal = 0.25;
  Rng rng(74);
  const GroundTruth truth = build_mean_truth(spec, rng);
  CHECK(truth.mean().signal_support.size() == 20);
}

TEST_CASE("sparse precision truth reconstructs the identity") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kMeanH0;
  spec.p = 50;
  spec.structure = CovarianceStructure::kSparse;
  Rng rng(75);
  const GroundTruth truth = build_mean_truth(spec, rng);
  const MeanTruth& t = truth.mean();
  CHECK(smallest_eigenvalue(t.sigma0) > 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < 50; ++i) {
    for (std::size_t j = 0; j < 50; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 50; ++k) s += t.sigma0(i, k) * t.omega0(k, j);
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("dense precision truth is corrected to positive definite") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kMeanH0;
  spec.p = 40;
  spec.structure = CovarianceStructure::kDense;
  Rng rng(76);
  const GroundTruth truth = build_mean_truth(spec, rng);
  CHECK(smallest_eigenvalue(truth.mean().omega0) > 0.0);
  CHECK(truth.mean().omega0.max_asymmetry() < 1e-12);
}

TEST_CASE("cov H0 truth has bitwise-equal covariance matrices") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kCovH0;
  spec.p = 20;
  spec.structure = CovarianceStructure::kSparse;
  Rng rng(77);
  const GroundTruth truth = build_cov_truth(spec, rng);
  const CovTruth& t = truth.cov();
  const auto a = t.sigma01.data();
  const auto b = t.sigma02.data();
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
  CHECK(smallest_eigenvalue(t.sigma01) > 0.0);
}

TEST_CASE("cov H1M signal is a nonnegative rank-one update") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kCovH1M;
  spec.p = 20;
  spec.signal = 1.5;
  spec.structure = CovarianceStructure::kSparse;
  Rng rng(78);
  const GroundTruth truth = build_cov_truth(spec, rng);
  const CovTruth& t = truth.cov();
  SquareMatrix u(20);
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j < 20; ++j) {
      u(i, j) = t.sigma02(i, j) - t.sigma01(i, j);  // joint correction cancels
      CHECK(u(i, j) >= 0.0);
    }
  }
  // rank one: u_ij u_kl == u_il u_kj
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t k = 5; k < 10; ++k) {
      const double lhs = u(i, 3) * u(k, 12);
      const double rhs = u(i, 12) * u(k, 3);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), 1.0));
    }
  }
}

TEST_CASE("cov H1R plants five mirrored lower-triangular signals") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kCovH1R;
  spec.p = 30;
  spec.signal = 3.0;
  spec.structure = CovarianceStructure::kSparse;
  Rng rng(79);
  const GroundTruth truth = build_cov_truth(spec, rng);
  const CovTruth& t = truth.cov();
  CHECK(t.signal_support.size() == 5);
  std::set<std::pair<std::size_t, std::size_t>> support(t.signal_support.begin(),
                                                        t.signal_support.end());
  CHECK(support.size() == 5);
  for (const auto& [i, j] : support) {
    CHECK(i > j);  // strictly lower triangle
    const double diff = t.sigma02(i, j) - t.sigma01(i, j);
    CHECK(diff > 0.0);
    CHECK(diff <= 3.0);
    CHECK(t.sigma02(j, i) - t.sigma01(j, i) == diff);  // mirrored
  }
  // off-support entries are untouched
  std::size_t changed = 0;
  for (std::size_t j = 0; j < 30; ++j) {
    for (std::size_t i = j + 1; i < 30; ++i) {
      if (t.sigma02(i, j) != t.sigma01(i, j)) ++changed;
    }
  }
  CHECK(changed == 5);
}

TEST_CASE("dense covariance structure matches the closed formula") {
  // Delta itself (p = 10) is positive definite, so the generated Sigma_01 is
  // O Delta O with no diagonal correction and the entries factor exactly.
  const std::size_t p = 10;
  SquareMatrix delta(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const double gap = std::abs(static_cast<double>(i) - static_cast<double>(j));
      const double mag = gap == 0.0 ? 1.0 : std::pow(0.4, std::pow(gap, 0.1));
      delta(i, j) = ((i + j) % 2 == 0 ? 1.0 : -1.0) * mag;
    }
  }
  REQUIRE(oracle::jacobi_eigenvalues(delta).front() > 0.0);

  ScenarioSpec spec;
  spec.kind = ScenarioKind::kCovH0;
  spec.p = p;
  spec.structure = CovarianceStructure::kDense;
  Rng rng(80);
  const GroundTruth truth = build_cov_truth(spec, rng);
  const CovTruth& t = truth.cov();
  std::vector<double> omega(p);
  for (std::size_t j = 0; j < p; ++j) omega[j] = std::sqrt(t.sigma01(j, j));  // delta_jj = 1
  CHECK(std::abs(t.sigma01(0, 1) / (omega[0] * omega[1]) - (-0.4)) < 1e-12);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      CHECK(std::abs(t.sigma01(i, j) - omega[i] * omega[j] * delta(i, j)) <
            1e-12 * std::max(1.0, std::abs(t.sigma01(i, j))));
    }
  }
}

TEST_CASE("sparse covariance diagonal scaling stays in range") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kCovH0;
  spec.p = 25;
  spec.structure = CovarianceStructure::kSparse;
  Rng rng(81);
  const GroundTruth truth = build_cov_truth(spec, rng);
  const CovTruth& t = truth.cov();
  // Sigma_01 = D^1/2 (Delta_1 + delta I) D^1/2 with d_j in (0.5, 2.5) and
  // delta = |lambda_min| + 0.05, so the diagonal is d_j * delta.
  double ratio_min = 1e300, ratio_max = 0.0;
  for (std::size_t j = 0; j < 25; ++j) {
    ratio_min = std::min(ratio_min, t.sigma01(j, j));
    ratio_max = std::max(ratio_max, t.sigma01(j, j));
  }
  CHECK(ratio_max / ratio_min <= 5.0 + 1e-9);  // (2.5/0.5)
  CHECK(smallest_eigenvalue(t.sigma01) > 0.0);
}

TEST_CASE("datasets are seed-deterministic and order-insensitive") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kCovH0;
  spec.p = 12;
  spec.n = 20;
  spec.structure = CovarianceStructure::kSparse;
  spec.seed = 99;

  Rng t1 = Rng(spec.seed).derive(0, 2);
  Rng t2 = Rng(spec.seed).derive(0, 2);
  const GroundTruth truth1 = build_cov_truth(spec, t1);
  const GroundTruth truth2 = build_cov_truth(spec, t2);

  Rng d1 = Rng(spec.seed).derive(0, 1);
  Rng d2 = Rng(spec.seed).derive(0, 1);
  const auto [x1, y1] = generate_dataset(truth1, spec, d1);
  const auto [x2, y2] = generate_dataset(truth2, spec, d2);
  const auto ax = x1.data(), bx = x2.data();
  for (std::size_t k = 0; k < ax.size(); ++k) CHECK(ax[k] == bx[k]);
  const auto ay = y1.data(), by = y2.data();
  for (std::size_t k = 0; k < ay.size(); ++k) CHECK(ay[k] == by[k]);

  // replicate 5's stream does not depend on whether replicates 0..4 ran
  Rng direct = Rng(spec.seed).derive(5, 1);
  Rng root(spec.seed);
  for (std::uint64_t r = 0; r < 5; ++r) {
    Rng waste = root.derive(r, 1);
    waste.normal();
  }
  Rng after = root.derive(5, 1);
  for (int k = 0; k < 16; ++k) CHECK(direct.next_u64() == after.next_u64());
}

TEST_CASE("planted mean signals are recovered by sample means") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kMeanH1R;
  spec.p = 30;
  spec.n = 100;
  spec.signal = 1.5;
  spec.structure = CovarianceStructure::kSparse;
  Rng trng(82);
  const GroundTruth truth = build_mean_truth(spec, trng);
  Rng drng(83);
  const auto [x, y] = generate_dataset(truth, spec, drng);
  for (std::size_t j : truth.mean().signal_support) {
    double s = 0.0;
    for (double v : y.column(j)) s += v;
    const double mean = s / static_cast<double>(spec.n);
    const double sd = std::sqrt(truth.mean().sigma0(j, j));
    CHECK(std::abs(mean - 1.5) < 4.0 * sd / std::sqrt(static_cast<double>(spec.n)));
  }
}

TEST_CASE("mean H0 data retains the null at the default threshold") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kMeanH0;
  spec.p = 100;
  spec.n = 100;
  spec.structure = CovarianceStructure::kSparse;
  Rng root(84);
  int retained = 0;
  for (int rep = 0; rep < 50; ++rep) {
    Rng trng = root.derive(rep, 2);
    const GroundTruth truth = build_mean_truth(spec, trng);
    Rng drng = root.derive(rep, 1);
    const auto [x, y] = generate_dataset(truth, spec, drng);
    if (decide_mean(mxpbf_mean(x, y, MeanTestConfig{}), 10.0) == Decision::kRetainNull) {
      ++retained;
    }
  }
  CHECK(retained >= 48);  // >= 95%
}

TEST_CASE("signal grids match the simulation designs") {
  const double mean_rare[] = {0.2, 0.25, 0.3, 0.35, 0.4, 0.5, 0.6, 0.8, 1.0, 1.5};
  const double mean_many[] = {0.025, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6};
  const double cov_rare[] = {0.5, 0.8, 1.5, 3.0, 6.0, 15.0};
  const double cov_many[] = {0.2, 0.3, 0.5, 0.7, 1.0, 1.5};
  auto check_grid = [](ScenarioKind kind, const double* want, std::size_t len) {
    const auto grid = signal_grid(kind);
    REQUIRE(grid.size() == len);
    for (std::size_t i = 0; i < len; ++i) CHECK(grid[i] == want[i]);
  };
  check_grid(ScenarioKind::kMeanH1R, mean_rare, 10);
  check_grid(ScenarioKind::kMeanH1M, mean_many, 10);
  check_grid(ScenarioKind::kCovH1R, cov_rare, 6);
  check_grid(ScenarioKind::kCovH1M, cov_many, 6);
  CHECK(signal_grid(ScenarioKind::kMeanH0).empty());
}

TEST_CASE("spec serialization round trips") {
  ScenarioSpec spec = ScenarioSpec::from_preset("cov-h1r-dense");
  spec.n = 64;
  spec.p = 200;
  spec.signal = 6.0;
  spec.seed = 1234567;
  const ScenarioSpec back = ScenarioSpec::from_key_values(spec.to_key_values());
  CHECK(back.kind == spec.kind);
  CHECK(back.structure == spec.structure);
  CHECK(back.n == spec.n);
  CHECK(back.p == spec.p);
  CHECK(back.signal == spec.signal);
  CHECK(back.seed == spec.seed);
  CHECK(spec.preset_name() == "cov-h1r-dense");

  CHECK_THROWS_AS(ScenarioSpec::from_preset("cov-h9-sparse"), InvalidInputError);
  CHECK_THROWS_AS(ScenarioSpec::from_preset("nonsense"), InvalidInputError);
  CHECK_THROWS_AS(ScenarioSpec::from_key_values("kind=mean-h0\nbogus_line\n"), InvalidInputError);
}

TEST_CASE("alternative kinds require a positive signal") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kMeanH1R;
  spec.p = 20;
  spec.signal = 0.0;
  Rng rng(85);
  CHECK_THROWS_AS(build_mean_truth(spec, rng), InvalidInputError);
  spec.kind = ScenarioKind::kCovH1M;
  CHECK_THROWS_AS(build_cov_truth(spec, rng), InvalidInputError);
  spec.kind = ScenarioKind::kMeanH0;
  CHECK_THROWS_AS(build_cov_truth(spec, rng), InvalidInputError);  // wrong family
}

TEST_SUITE_END();
