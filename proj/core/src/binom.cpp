#include "urndis/binom.hpp"

#include <cmath>

namespace urndis {

double binom_ratio(const LogFactorialTable& lf, std::uint64_t n, std::uint64_t j,
                   std::uint64_t k) {
  if (k > n) throw DomainError("binom_ratio: k > n");
  if (n > lf.max_n()) throw DomainError("binom_ratio: table smaller than n");
  if (j > n - k) return 0.0;
  if (j == 0 || k == 0) return 1.0;
  // ln of C(n-j,k)/C(n,k) = [lf(n-j) - lf(n-j-k)] - [lf(n) - lf(n-k)]
  detail::DD a = detail::dd_sub(lf.dd(n - j), lf.dd(n - j - k));
  detail::DD b = detail::dd_sub(lf.dd(n), lf.dd(n - k));
  detail::DD e = detail::dd_sub(a, b);
  double r = std::exp(e.hi) * (1.0 + e.lo);
  if (r > 1.0) r = 1.0;
  if (r < 0.0) r = 0.0;
  return r;
}

double binom_ratio_product(std::uint64_t n, std::uint64_t j, std::uint64_t k) {
  if (k > n) throw DomainError("binom_ratio_product: k > n");
  if (j > n - k) return 0.0;
  double r = 1.0;
  if (j <= k) {
    for (std::uint64_t t = 0; t < j; ++t)
      r *= static_cast<double>(n - k - t) / static_cast<double>(n - t);
  } else {
    // symmetric form with k factors
    for (std::uint64_t t = 0; t < k; ++t)
      r *= static_cast<double>(n - j - t) / static_cast<double>(n - t);
  }
  return r;
}

}  // namespace urndis
