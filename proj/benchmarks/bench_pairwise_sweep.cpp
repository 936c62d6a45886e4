#include <benchmark/benchmark.h>

#include "mxpbf/cov_test.hpp"
#include "mxpbf/mean_test.hpp"
#include "mxpbf/rng.hpp"

namespace {

mxpbf::SampleMatrix random_matrix(std::uint64_t seed, std::size_t n, std::size_t p) {
  mxpbf::Rng rng(seed);
  mxpbf::SampleMatrix m(n, p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = rng.normal();
  }
  return m;
}

void BM_mxpbf_cov(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const mxpbf::SampleMatrix x = random_matrix(1, 100, p);
  const mxpbf::SampleMatrix y = random_matrix(2, 100, p);
  mxpbf::CovTestOptions opt;
  opt.threads = threads;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mxpbf::mxpbf_cov(x, y, mxpbf::CovTestConfig{}, opt));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(p * (p - 1)));
}

void BM_mxpbf_mean(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const mxpbf::SampleMatrix x = random_matrix(3, 100, p);
  const mxpbf::SampleMatrix y = random_matrix(4, 100, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mxpbf::mxpbf_mean(x, y, mxpbf::MeanTestConfig{}));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * static_cast<int64_t>(p));
}

void BM_log_pbf_cov_pair(benchmark::State& state) {
  const mxpbf::SampleMatrix x = random_matrix(5, 100, 2);
  const mxpbf::SampleMatrix y = random_matrix(6, 100, 2);
  const mxpbf::CovTestConfig cfg;
  const double gamma = cfg.gamma_for(200, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mxpbf::log_pbf_cov(x.column(0), y.column(0), x.column(1), y.column(1), cfg, gamma));
  }
}

}  // namespace

BENCHMARK(BM_mxpbf_cov)
    ->Args({100, 1})
    ->Args({500, 1})
    ->Args({500, 2})
    ->Args({1000, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mxpbf_mean)->Arg(100)->Arg(1000)->Arg(5000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_log_pbf_cov_pair);

BENCHMARK_MAIN();
