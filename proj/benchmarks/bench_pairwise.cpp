#include <benchmark/benchmark.h>

#include "urndis/pairwise.hpp"
#include "urndis/rng.hpp"

namespace {

using namespace urndis;

CountTable synthetic_table(std::size_t nsamples, std::uint64_t depth) {
  SplitMix64 rng(4);
  const std::uint64_t colors = 700;
  CountTable t;
  for (std::size_t c = 0; c < nsamples; ++c)
    t.sample_ids.push_back("s" + std::to_string(c));
  for (std::uint64_t r = 0; r < colors; ++r)
    t.otu_ids.push_back("otu" + std::to_string(r));
  t.counts.assign(colors, std::vector<std::uint64_t>(nsamples, 0));
  for (std::size_t c = 0; c < nsamples; ++c) {
    for (std::uint64_t d = 0; d < depth; ++d) {
      const double v = rng.next_unit();
      const std::uint64_t color = std::min(
          static_cast<std::uint64_t>(v * v * double(colors)), colors - 1);
      ++t.counts[color][c];
    }
  }
  return t;
}

void bench_pairwise_matrix(benchmark::State& state) {
  const CountTable t = synthetic_table(state.range(0), 2000);
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_matrices(t, threads));
  }
}
BENCHMARK(bench_pairwise_matrix)
    ->Args({10, 1})
    ->Args({10, 4})
    ->Args({25, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace
