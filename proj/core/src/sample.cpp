#include "urndis/sample.hpp"

#include <algorithm>

namespace urndis {

Sample::Sample(std::vector<std::pair<ColorId, std::uint64_t>> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty()) throw InvalidInput("sample is empty");
  std::sort(counts_.begin(), counts_.end());
  // merge duplicate colors in place
  std::size_t out = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i].second == 0)
      throw InvalidInput("sample multiplicity must be positive");
    if (out > 0 && counts_[out - 1].first == counts_[i].first) {
      counts_[out - 1].second += counts_[i].second;
    } else {
      counts_[out++] = counts_[i];
    }
  }
  counts_.resize(out);
  n_ = 0;
  for (const auto& [c, m] : counts_) n_ += m;
}

Sample Sample::from_draws(std::span<const ColorId> draws) {
  std::vector<std::pair<ColorId, std::uint64_t>> counts;
  counts.reserve(draws.size());
  for (ColorId c : draws) counts.emplace_back(c, 1);
  return Sample(std::move(counts));
}

std::uint64_t Sample::count_of(ColorId c) const noexcept {
  auto it = std::lower_bound(counts_.begin(), counts_.end(), c,
                             [](const auto& e, ColorId v) { return e.first < v; });
  return (it != counts_.end() && it->first == c) ? it->second : 0;
}

PairedSummary summarize_pair(const Sample& x, const Sample& y) {
  PairedSummary s;
  s.n_x = x.n();
  s.n_y = y.n();

  const auto& xc = x.counts();
  const auto& yc = y.counts();

  // merge-join over the sorted color lists
  std::vector<std::pair<std::uint64_t, std::uint64_t>> q;  // (j, weight)
  q.reserve(xc.size());
  s.m.reserve(xc.size() + yc.size());

  std::size_t a = 0, b = 0;
  while (a < xc.size() || b < yc.size()) {
    std::uint64_t i = 0, j = 0;
    if (b == yc.size() || (a < xc.size() && xc[a].first < yc[b].first)) {
      i = xc[a++].second;
    } else if (a == xc.size() || yc[b].first < xc[a].first) {
      j = yc[b++].second;
    } else {
      i = xc[a++].second;
      j = yc[b++].second;
    }
    if (i > 0) q.emplace_back(j, i);
    s.m.push_back({i, j, 1});
  }

  std::sort(q.begin(), q.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  {
    std::size_t out = 0;
    for (std::size_t t = 0; t < q.size(); ++t) {
      if (out > 0 && q[out - 1].first == q[t].first) {
        q[out - 1].second += q[t].second;
      } else {
        q[out++] = q[t];
      }
    }
    q.resize(out);
  }
  s.q = std::move(q);

  std::sort(s.m.begin(), s.m.end(), [](const MEntry& l, const MEntry& r) {
    return l.i != r.i ? l.i < r.i : l.j < r.j;
  });
  {
    std::size_t out = 0;
    for (std::size_t t = 0; t < s.m.size(); ++t) {
      if (out > 0 && s.m[out - 1].i == s.m[t].i && s.m[out - 1].j == s.m[t].j) {
        s.m[out - 1].colors += s.m[t].colors;
      } else {
        s.m[out++] = s.m[t];
      }
    }
    s.m.resize(out);
  }
  return s;
}

}  // namespace urndis
