#include "urndis/estimator.hpp"

#include <cstdio>

namespace urndis {

namespace {

// Sums land in [0,1] up to rounding; anything past 1e-9 means a real bug.
double clamp_unit(double t) {
  if (t > 1.0) {
    if (t > 1.0 + 1e-9)
      std::fprintf(stderr, "urndis: estimate %.17g clamped to 1 (exceeds tolerance)\n", t);
    return 1.0;
  }
  if (t < 0.0) {
    if (t < -1e-9)
      std::fprintf(stderr, "urndis: estimate %.17g clamped to 0 (exceeds tolerance)\n", t);
    return 0.0;
  }
  return t;
}

}  // namespace

double theta_hat(const PairedSummary& s, std::uint64_t k, const LogFactorialTable& lf) {
  if (k < 1 || k > s.n_y) throw DomainError("theta_hat: k outside [1, n_y]");
  double acc = 0.0;
  for (const auto& [j, qj] : s.q)
    acc += binom_ratio(lf, s.n_y, j, k) * static_cast<double>(qj);
  return clamp_unit(acc / static_cast<double>(s.n_x));
}

double theta_hat(const PairedSummary& s, std::uint64_t k) {
  LogFactorialTable lf(s.n_y);
  return theta_hat(s, k, lf);
}

DissimilaritySeries theta_hat_all(const PairedSummary& s) {
  if (s.n_x < 1 || s.n_y < 1) throw InvalidInput("theta_hat_all: empty summary");
  DissimilaritySeries out;
  out.n_x = s.n_x;
  out.n_y = s.n_y;
  out.theta.assign(s.n_y, 0.0);

  const std::uint64_t ny = s.n_y;
  for (const auto& [j, qj] : s.q) {
    const double w = static_cast<double>(qj);
    // r(k) = C(n_y-j, k)/C(n_y, k) via r(k) = r(k-1) * (n_y-j-k+1)/(n_y-k+1);
    // identically zero once k > n_y - j.
    double r = 1.0;
    for (std::uint64_t k = 1; k + j <= ny; ++k) {
      r *= static_cast<double>(ny - j - k + 1) / static_cast<double>(ny - k + 1);
      out.theta[k - 1] += w * r;
    }
  }

  const double nx = static_cast<double>(s.n_x);
  for (double& t : out.theta) t = clamp_unit(t / nx);
  return out;
}

}  // namespace urndis
