#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "urndis/errors.hpp"

namespace urndis {

namespace detail {

// Unevaluated double-double value hi + lo, |lo| <= ulp(hi)/2.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

inline DD fast_renorm(double hi, double lo) {
  double s = hi + lo;
  return {s, lo - (s - hi)};
}

inline DD dd_add(DD a, double b) {
  DD s = two_sum(a.hi, b);
  return fast_renorm(s.hi, s.lo + a.lo);
}

inline DD dd_sub(DD a, DD b) {
  DD s = two_sum(a.hi, -b.hi);
  return fast_renorm(s.hi, s.lo + (a.lo - b.lo));
}

}  // namespace detail

// Table of ln(n!) for n = 0..max_n. Entries are kept in double-double form so
// that differences of far-apart entries (the exponents of binomial ratios)
// retain full double accuracy even when ln(n!) itself is ~1e5. Read-only
// after construction and safe to share across threads.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(std::size_t max_n);

  std::size_t max_n() const noexcept { return hi_.size() - 1; }

  // ln(n!)
  double value(std::size_t n) const {
    if (n > max_n()) throw DomainError("LogFactorialTable: index out of range");
    return hi_[n];
  }
  double operator[](std::size_t n) const { return value(n); }

  detail::DD dd(std::size_t n) const {
    if (n > max_n()) throw DomainError("LogFactorialTable: index out of range");
    return {hi_[n], lo_[n]};
  }

  // ln C(n, k); requires k <= n <= max_n.
  double log_binom(std::uint64_t n, std::uint64_t k) const;

 private:
  std::vector<double> hi_;
  std::vector<double> lo_;
};

}  // namespace urndis
