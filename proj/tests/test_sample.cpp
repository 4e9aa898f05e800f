#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "urndis/rng.hpp"
#include "urndis/sample.hpp"
#include "urndis/selfcheck.hpp"

using namespace urndis;

namespace {

std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> m_as_map(
    const PairedSummary& s) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> out;
  for (const MEntry& e : s.m) out[{e.i, e.j}] = e.colors;
  return out;
}

std::map<std::uint64_t, std::uint64_t> q_as_map(const PairedSummary& s) {
  return {s.q.begin(), s.q.end()};
}

}  // namespace

TEST_CASE("sample construction") {
  CHECK_THROWS_AS(Sample({}), InvalidInput);
  CHECK_THROWS_AS(Sample({{1, 0}}), InvalidInput);

  const Sample s({{3, 2}, {1, 1}, {3, 1}});  // unsorted, duplicate color
  CHECK(s.n() == 4);
  CHECK(s.count_of(3) == 3);
  CHECK(s.count_of(1) == 1);
  CHECK(s.count_of(7) == 0);

  const std::vector<ColorId> draws{5, 2, 5, 5};
  const Sample d = Sample::from_draws(draws);
  CHECK(d.n() == 4);
  CHECK(d.count_of(5) == 3);
  CHECK(d.count_of(2) == 1);
}

TEST_CASE("summarize_pair fixture") {
  const Sample x({{1, 1}, {2, 1}});
  const Sample y({{1, 2}, {3, 1}});
  const PairedSummary s = summarize_pair(x, y);

  CHECK(s.n_x == 2);
  CHECK(s.n_y == 3);
  CHECK(q_as_map(s) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {2, 1}});
  CHECK(m_as_map(s) ==
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>{
            {{1, 2}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(s.q0() == 1);
}

TEST_CASE("summarize_pair disjoint and nested") {
  {
    const PairedSummary s = summarize_pair(Sample({{5, 3}}), Sample({{7, 4}}));
    CHECK(q_as_map(s) == std::map<std::uint64_t, std::uint64_t>{{0, 3}});
    CHECK(m_as_map(s) ==
          std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>{
              {{3, 0}, 1}, {{0, 4}, 1}});
  }
  {
    const PairedSummary s = summarize_pair(Sample({{1, 2}}), Sample({{1, 5}}));
    CHECK(q_as_map(s) == std::map<std::uint64_t, std::uint64_t>{{5, 2}});
    CHECK(m_as_map(s) ==
          std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>{{{2, 5}, 1}});
    CHECK(s.q0() == 0);
  }
}

TEST_CASE("summary invariants on random pairs") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Sample x = random_sample(rng, 1, 30, 8);
    const Sample y = random_sample(rng, 1, 30, 8);
    const PairedSummary s = summarize_pair(x, y);

    std::uint64_t qsum = 0;
    for (const auto& [j, qj] : s.q) qsum += qj;
    CHECK(qsum == s.n_x);

    std::uint64_t ysum = 0;
    std::map<std::uint64_t, std::uint64_t> q_from_m;
    for (const MEntry& e : s.m) {
      ysum += e.j * e.colors;
      if (e.i > 0) q_from_m[e.j] += e.i * e.colors;
    }
    CHECK(ysum == s.n_y);
    CHECK(q_from_m == q_as_map(s));
  }
}

TEST_CASE("relabeling and draw order do not matter") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Sample x = random_sample(rng, 1, 20, 6);
    const Sample y = random_sample(rng, 1, 20, 6);
    const PairedSummary base = summarize_pair(x, y);

    // bijective relabeling c -> 1000 - 13*c
    auto relabel = [](const Sample& s) {
      std::vector<std::pair<ColorId, std::uint64_t>> counts;
      for (const auto& [c, m] : s.counts()) counts.emplace_back(1000 - 13 * c, m);
      return Sample(std::move(counts));
    };
    const PairedSummary rel = summarize_pair(relabel(x), relabel(y));
    CHECK(q_as_map(rel) == q_as_map(base));
    CHECK(m_as_map(rel) == m_as_map(base));
  }
}

TEST_CASE("Q sparsity bound") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Sample x = random_sample(rng, 1, 200, 40);
    const Sample y = random_sample(rng, 1, 2000, 40);
    const PairedSummary s = summarize_pair(x, y);
    std::size_t positive = 0;
    for (const auto& [j, qj] : s.q)
      if (j >= 1) ++positive;
    CHECK(static_cast<double>(positive) <=
          1.0 + std::sqrt(2.0 * static_cast<double>(s.n_y)));
  }
  // one larger instance
  const Sample x = random_sample(rng, 500, 500, 64);
  const Sample y = random_sample(rng, 10000, 10000, 64);
  const PairedSummary s = summarize_pair(x, y);
  std::size_t positive = 0;
  for (const auto& [j, qj] : s.q)
    if (j >= 1) ++positive;
  CHECK(static_cast<double>(positive) <= 1.0 + std::sqrt(2.0e4));
}
