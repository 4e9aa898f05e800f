#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "urndis/rng.hpp"
#include "urndis/sample.hpp"

namespace urndis {

// Random sample with n in [n_min, n_max] and colors from {1..alphabet}.
Sample random_sample(SplitMix64& rng, std::uint64_t n_min, std::uint64_t n_max,
                     std::uint64_t alphabet);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst deviation or failure description
};

// Deterministic oracle-equivalence suite: the closed-form estimator and
// jackknife against brute-force enumeration on random small pairs, the
// hand-computed fixture, exhaustive-enumeration unbiasedness and variance
// against the closed forms, and the series identities.
std::vector<CheckResult> run_selfchecks(std::uint64_t seed, std::size_t pairs = 200);

}  // namespace urndis
