#pragma once

#include <cstdint>
#include <vector>

#include "urndis/binom.hpp"
#include "urndis/log_factorial.hpp"
#include "urndis/sample.hpp"

namespace urndis {

// theta[k-1] estimates, for k = 1..n_y, the probability that a fresh x-draw
// is of a color missing from a random k-subset of the y-sample. The sequence
// is non-increasing in k and ends at Q(0)/n_x.
struct DissimilaritySeries {
  std::uint64_t n_x = 0;
  std::uint64_t n_y = 0;
  std::vector<double> theta;

  double at_k(std::uint64_t k) const {
    if (k < 1 || k > theta.size()) throw DomainError("series index out of range");
    return theta[k - 1];
  }
};

// Minimum-variance unbiased estimate of the k-draw dissimilarity:
// (1/n_x) * sum_j binom_ratio(n_y, j, k) * Q(j). Requires 1 <= k <= n_y.
// The table must cover n_y.
double theta_hat(const PairedSummary& s, std::uint64_t k, const LogFactorialTable& lf);

// Convenience overload that builds its own table.
double theta_hat(const PairedSummary& s, std::uint64_t k);

// All of k = 1..n_y in O(n_y * |q|) using a per-j telescoping recurrence.
// Agrees with per-k theta_hat to ~1e-13 and is exactly non-increasing.
DissimilaritySeries theta_hat_all(const PairedSummary& s);

}  // namespace urndis
