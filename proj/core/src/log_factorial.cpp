#include "urndis/log_factorial.hpp"

#include <cmath>

namespace urndis {

LogFactorialTable::LogFactorialTable(std::size_t max_n) {
  hi_.resize(max_n + 1);
  lo_.resize(max_n + 1);
  detail::DD acc{0.0, 0.0};
  hi_[0] = lo_[0] = 0.0;
  for (std::size_t t = 1; t <= max_n; ++t) {
    acc = detail::dd_add(acc, std::log(static_cast<double>(t)));
    hi_[t] = acc.hi;
    lo_[t] = acc.lo;
  }
}

double LogFactorialTable::log_binom(std::uint64_t n, std::uint64_t k) const {
  if (k > n) throw DomainError("log_binom: k > n");
  detail::DD a = dd_sub(dd(n), dd(k));
  detail::DD b = dd_sub(a, dd(n - k));
  return b.hi + b.lo;
}

}  // namespace urndis
