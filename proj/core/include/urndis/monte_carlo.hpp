#pragma once

#include <cstdint>
#include <vector>

#include "urndis/rng.hpp"
#include "urndis/sample.hpp"
#include "urndis/urn.hpp"

namespace urndis {

struct MonteCarloConfig {
  std::uint64_t n_x = 0;
  std::uint64_t n_y = 0;
  std::vector<std::uint64_t> k_set;
  std::uint64_t replicates = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware count
};

struct MonteCarloReport {
  std::uint64_t k = 0;
  std::uint64_t replicates = 0;
  std::uint64_t seed = 0;
  double mean_theta_hat = 0.0;
  double empirical_variance = 0.0;
  double mean_jackknife = 0.0;       // NaN when n_x < 2
  double exact_theta = 0.0;
  double exact_variance = 0.0;       // Hoeffding closed form
  double projection_variance = 0.0;
  double ks_statistic = 0.0;         // NaN when the estimator is degenerate
  bool degenerate = false;           // exact_variance == 0
};

// Per-replicate estimates; theta[ki][r] / jackknife[ki][r] for k_set[ki] and
// replicate r. jackknife is empty when n_x < 2. Deterministic in (seed,
// replicate index) regardless of thread count.
struct MonteCarloSamples {
  std::vector<std::uint64_t> k_set;
  std::vector<std::vector<double>> theta;
  std::vector<std::vector<double>> jackknife;
};

// One sample of n draws from an urn.
Sample sample_from_urn(const Urn& urn, std::uint64_t n, SplitMix64& rng);

MonteCarloSamples monte_carlo_samples(const UrnPair& u, const MonteCarloConfig& cfg);

// Aggregated reports, one per k. Requires replicates >= 100.
std::vector<MonteCarloReport> monte_carlo(const UrnPair& u, const MonteCarloConfig& cfg);

// Two-sided KS distance between the values and the standard normal CDF.
double ks_statistic_normal(std::vector<double> values);

}  // namespace urndis
