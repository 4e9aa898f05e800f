#pragma once

#include <cstdint>

#include "urndis/sample.hpp"
#include "urndis/urn.hpp"

namespace urndis {

// Enumeration bound for the brute-force estimator and jackknife.
inline constexpr std::uint64_t kBruteMaxNy = 12;

// Direct kernel average: enumerates every (x-draw, k-subset of y-draws) pair
// and averages the indicator that the x-color misses the subset. Integer
// arithmetic throughout; mathematically identical to theta_hat. Guarded by
// n_y <= kBruteMaxNy.
double theta_hat_brute(const Sample& x, const Sample& y, std::uint64_t k);

struct JackknifeBrute {
  double var_x = 0.0;
  double var_y = 0.0;
};

// Deleted-observation jackknife: re-estimates on every leave-one-out sample.
// Same guards as theta_hat_brute; requires n_x >= 2.
JackknifeBrute jackknife_brute(const Sample& x, const Sample& y, std::uint64_t k);

// xi_{1,j}(k) = theta(2k - j) - theta(k)^2, the conditional-variance
// coefficient given X_1 and j y-draws. Requires j <= k.
double xi_1j_exact(const UrnPair& u, std::uint64_t j, std::uint64_t k);

// xi_{0,j}(k): variance of the conditional miss probability given j y-draws,
// computed by enumerating color multisets of size j with multinomial weights.
// Guarded by the multiset count C(|I_y| + j - 1, j) <= 1e6. Requires j <= k.
double xi_0j_exact(const UrnPair& u, std::uint64_t j, std::uint64_t k);

// Exact variance of theta_hat(k) at sample sizes (n_x, n_y):
// sum_j C(k,j) C(n_y-k, k-j) [(n_x-1) xi_{0,j}(k) + xi_{1,j}(k)] / (n_x C(n_y,k)).
double hoeffding_variance_exact(const UrnPair& u, std::uint64_t n_x, std::uint64_t n_y,
                                std::uint64_t k);

// Variance of the projection of theta_hat(k) onto sums of per-observation
// terms: xi_{1,0}(k)/n_x + k^2 xi_{0,1}(k)/n_y. Never exceeds the exact
// variance.
double projection_variance(const UrnPair& u, std::uint64_t n_x, std::uint64_t n_y,
                           std::uint64_t k);

struct ExactMoments {
  double mean = 0.0;
  double variance = 0.0;
};

// Probability-weighted mean and variance of theta_hat(k) over every dataset
// of the given sizes, by exhaustive enumeration of draw multisets. The mean
// equals theta_exact(k) (unbiasedness) and the variance equals
// hoeffding_variance_exact. Guarded by ~1e6 total datasets.
ExactMoments enumerate_estimator_moments(const UrnPair& u, std::uint64_t n_x,
                                         std::uint64_t n_y, std::uint64_t k);

}  // namespace urndis
