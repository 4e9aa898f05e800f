#pragma once

#include <cstdint>

#include "urndis/log_factorial.hpp"

namespace urndis {

// C(n-j, k) / C(n, k): the probability that j marked elements all avoid a
// uniformly random k-subset of n elements. Zero when j > n - k. Evaluated as
// exp of log-factorial differences; throws DomainError when k > n or the
// table is too small.
double binom_ratio(const LogFactorialTable& lf, std::uint64_t n, std::uint64_t j,
                   std::uint64_t k);

// Same ratio by the telescoping product prod_{t=0}^{j-1} (n-k-t)/(n-t).
// O(min(j, k)) time; kept as an independent cross-check of the log path.
double binom_ratio_product(std::uint64_t n, std::uint64_t j, std::uint64_t k);

}  // namespace urndis
