#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "urndis/estimator.hpp"

namespace urndis {

// OLS fit of ln(theta(k-1) - theta(k)) against k over a window. The slope
// estimates ln(rho), where rho is the geometric decay rate of the series
// tail; rho^n_y bounds the remaining gap to the k -> infinity limit.
struct RegressionReport {
  double slope = 0.0;            // estimate of ln(rho); -inf when degenerate
  double intercept = 0.0;
  double rho_hat = 0.0;          // exp(slope) clamped to [0, 1]
  double rho_hat_pow_ny = 0.0;   // rho_hat^n_y
  double max_abs_residual = 0.0; // largest |residual| over the points used
  std::uint64_t k_lo = 0;
  std::uint64_t k_hi = 0;
  std::size_t points_used = 0;
  std::size_t points_dropped = 0;  // non-positive differences in the window
  bool degenerate = false;         // fewer than 2 usable points
};

// Successive differences theta(k) - theta(k-1) for k = 2..n_y (length
// n_y - 1, all entries <= 0). The convergence statistic is the magnitude of
// the last entry. Requires n_y >= 2.
std::vector<double> discrete_derivative(const DissimilaritySeries& series);

// Regression over k in [k_lo, k_hi]; only strictly positive differences
// enter the fit. Requires 2 <= k_lo <= k_hi <= n_y.
RegressionReport rho_regression(const DissimilaritySeries& series, std::uint64_t k_lo,
                                std::uint64_t k_hi);

// Default window: [max(2, floor(0.6 * n_y)), n_y].
std::pair<std::uint64_t, std::uint64_t> default_regression_window(std::uint64_t n_y);

}  // namespace urndis
