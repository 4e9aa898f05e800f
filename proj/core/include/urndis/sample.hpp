#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "urndis/errors.hpp"

namespace urndis {

using ColorId = std::uint64_t;

// A multiset of colors drawn from one urn. Draw order is never stored: every
// statistic in this library depends on the data only through these counts.
class Sample {
 public:
  // Aggregates duplicate colors; rejects empty input and zero multiplicities.
  explicit Sample(std::vector<std::pair<ColorId, std::uint64_t>> counts);

  static Sample from_draws(std::span<const ColorId> draws);

  // Sorted by color, multiplicities >= 1.
  const std::vector<std::pair<ColorId, std::uint64_t>>& counts() const noexcept {
    return counts_;
  }
  std::uint64_t n() const noexcept { return n_; }

  // Multiplicity of a color, 0 if absent.
  std::uint64_t count_of(ColorId c) const noexcept;

 private:
  std::vector<std::pair<ColorId, std::uint64_t>> counts_;
  std::uint64_t n_ = 0;
};

struct MEntry {
  std::uint64_t i = 0;       // occurrences in the x-sample
  std::uint64_t j = 0;       // occurrences in the y-sample
  std::uint64_t colors = 0;  // number of colors with this (i, j) profile
};

// Sufficient statistics of an ordered sample pair (x, y).
//
// q holds (j, Q(j)) where Q(j) counts x-draws whose color appears j times in
// the y-sample; only nonzero entries are stored. m refines q per color and
// covers every color present in either sample, including i = 0 rows for
// colors seen only in y (the y-jackknife needs them).
struct PairedSummary {
  std::uint64_t n_x = 0;
  std::uint64_t n_y = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> q;  // sorted by j
  std::vector<MEntry> m;                                   // sorted by (i, j)

  // Q(0), i.e. the number of x-draws whose color is absent from y.
  std::uint64_t q0() const noexcept {
    return (!q.empty() && q.front().first == 0) ? q.front().second : 0;
  }
};

PairedSummary summarize_pair(const Sample& x, const Sample& y);

}  // namespace urndis
