#include <benchmark/benchmark.h>

#include "mxpbf/baselines.hpp"
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

void BM_clx_cov(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const mxpbf::SampleMatrix x = random_matrix(11, 100, p);
  const mxpbf::SampleMatrix y = random_matrix(12, 100, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mxpbf::clx_cov_test(x, y, static_cast<int>(state.range(1))));
  }
}

void BM_schott(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const mxpbf::SampleMatrix x = random_matrix(13, 100, p);
  const mxpbf::SampleMatrix y = random_matrix(14, 100, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mxpbf::schott_cov_test(x, y));
  }
}

void BM_bs_mean(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const mxpbf::SampleMatrix x = random_matrix(15, 100, p);
  const mxpbf::SampleMatrix y = random_matrix(16, 100, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mxpbf::bs_mean_test(x, y));
  }
}

}  // namespace

BENCHMARK(BM_clx_cov)->Args({100, 1})->Args({300, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_schott)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bs_mean)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
