#include <benchmark/benchmark.h>

#include "urndis/estimator.hpp"
#include "urndis/rng.hpp"
#include "urndis/sample.hpp"
#include "urndis/variance.hpp"

namespace {

using namespace urndis;

Sample heavy_tailed_sample(SplitMix64& rng, std::uint64_t n) {
  std::vector<ColorId> draws(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    if (rng.next_unit() < 0.5) {
      draws[t] = rng.next_range(1, 3000);
    } else {
      const double v = rng.next_unit();
      draws[t] = 4000 + static_cast<ColorId>(100.0 * v * v);
    }
  }
  return Sample::from_draws(draws);
}

void bench_summarize(benchmark::State& state) {
  SplitMix64 rng(1);
  const std::uint64_t n = state.range(0);
  const Sample x = heavy_tailed_sample(rng, n);
  const Sample y = heavy_tailed_sample(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(summarize_pair(x, y));
  }
}
BENCHMARK(bench_summarize)->Arg(1000)->Arg(10000);

void bench_theta_hat_all(benchmark::State& state) {
  SplitMix64 rng(2);
  const std::uint64_t n = state.range(0);
  const PairedSummary s =
      summarize_pair(heavy_tailed_sample(rng, n), heavy_tailed_sample(rng, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_hat_all(s));
  }
}
BENCHMARK(bench_theta_hat_all)->Arg(1000)->Arg(10000);

void bench_jackknife_total(benchmark::State& state) {
  SplitMix64 rng(3);
  const std::uint64_t n = state.range(0);
  const PairedSummary s =
      summarize_pair(heavy_tailed_sample(rng, n), heavy_tailed_sample(rng, n));
  const DissimilaritySeries series = theta_hat_all(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jackknife_total(s, series));
  }
}
BENCHMARK(bench_jackknife_total)->Arg(1000)->Arg(10000);

void bench_log_factorial_table(benchmark::State& state) {
  const std::size_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(LogFactorialTable(n));
  }
}
BENCHMARK(bench_log_factorial_table)->Arg(10000);

}  // namespace
