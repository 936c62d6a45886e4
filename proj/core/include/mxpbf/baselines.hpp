#pragma once

#include "mxpbf/matrix.hpp"

namespace mxpbf {

enum class FreqMethod { kBS, kSD, kSchott, kLC, kCLXCov };

/// A frequentist competitor's statistic and its asymptotic p-value. BS, SD,
/// Schott and LC are standardized to N(0,1) under H0 (upper tail); the CLX
/// covariance statistic follows a type-I extreme value law.
struct FreqTestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  FreqMethod method = FreqMethod::kBS;
};

/// Bai-Saranadasa L2 mean test: ||Xbar - Ybar||^2 with trace correction,
/// standardized by the plug-in estimate of tr(Sigma^2).
FreqTestResult bs_mean_test(const SampleMatrix& x, const SampleMatrix& y);

/// Srivastava-Du diagonally standardized L2 mean test.
FreqTestResult sd_mean_test(const SampleMatrix& x, const SampleMatrix& y);

/// Schott Frobenius-distance covariance test.
FreqTestResult schott_cov_test(const SampleMatrix& x, const SampleMatrix& y);

/// Li-Chen covariance test, biased (pair-sum) version: the 3- and 4-index
/// mean-correction sums of the full U-statistics are dropped.
FreqTestResult lc_cov_test(const SampleMatrix& x, const SampleMatrix& y);

/// Cai-Liu-Xia maximum standardized covariance-difference test. The pair
/// sweep follows the same deterministic parallel-merge contract as mxpbf_cov.
FreqTestResult clx_cov_test(const SampleMatrix& x, const SampleMatrix& y, int threads = 1);

}  // namespace mxpbf
