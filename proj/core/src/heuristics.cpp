#include "urndis/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace urndis {

std::vector<double> discrete_derivative(const DissimilaritySeries& series) {
  const std::size_t ny = series.theta.size();
  if (ny < 2) throw DomainError("discrete_derivative requires n_y >= 2");
  std::vector<double> out(ny - 1);
  for (std::size_t i = 0; i + 1 < ny; ++i)
    out[i] = series.theta[i + 1] - series.theta[i];
  return out;
}

RegressionReport rho_regression(const DissimilaritySeries& series, std::uint64_t k_lo,
                                std::uint64_t k_hi) {
  const std::uint64_t ny = series.theta.size();
  if (k_lo < 2 || k_lo > k_hi || k_hi > ny)
    throw DomainError("rho_regression: window must satisfy 2 <= k_lo <= k_hi <= n_y");

  RegressionReport rep;
  rep.k_lo = k_lo;
  rep.k_hi = k_hi;

  std::vector<double> ks, ys;
  ks.reserve(k_hi - k_lo + 1);
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    const double d = series.theta[k - 2] - series.theta[k - 1];
    if (d > 0.0) {
      ks.push_back(static_cast<double>(k));
      ys.push_back(std::log(d));
    } else {
      ++rep.points_dropped;
    }
  }
  rep.points_used = ks.size();

  if (rep.points_used < 2) {
    rep.degenerate = true;
    rep.slope = -std::numeric_limits<double>::infinity();
    rep.intercept = 0.0;
    rep.rho_hat = 0.0;
    rep.rho_hat_pow_ny = 0.0;
    rep.max_abs_residual = 0.0;
    return rep;
  }

  const std::size_t n = ks.size();
  double kbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    kbar += ks[i];
    ybar += ys[i];
  }
  kbar /= static_cast<double>(n);
  ybar /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dk = ks[i] - kbar;
    sxx += dk * dk;
    sxy += dk * (ys[i] - ybar);
  }
  rep.slope = sxy / sxx;
  rep.intercept = ybar - rep.slope * kbar;
  rep.rho_hat = std::clamp(std::exp(rep.slope), 0.0, 1.0);
  rep.rho_hat_pow_ny = std::pow(rep.rho_hat, static_cast<double>(ny));
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(ys[i] - (rep.slope * ks[i] + rep.intercept)));
  rep.max_abs_residual = worst;
  return rep;
}

std::pair<std::uint64_t, std::uint64_t> default_regression_window(std::uint64_t n_y) {
  const auto lo = static_cast<std::uint64_t>(0.6 * static_cast<double>(n_y));
  return {std::max<std::uint64_t>(2, lo), n_y};
}

}  // namespace urndis
