#pragma once

#include <cstdint>
#include <vector>

#include "urndis/estimator.hpp"
#include "urndis/log_factorial.hpp"
#include "urndis/sample.hpp"

namespace urndis {

// Summation range used by the closed-form jackknives. The published formulas
// stop at j = n_y - k (x side) and start at i = 1 (y side); both ranges drop
// terms whose ratio coefficient is zero but whose squared deviation is not,
// and so disagree with the deleted-observation definitions. Corrected sums
// every stored entry and matches those definitions exactly; Literal is kept
// only for side-by-side comparison.
enum class JackknifeForm { Corrected, Literal };

struct VarianceSeries {
  std::uint64_t n_x = 0;
  std::uint64_t n_y = 0;
  std::vector<double> var_x;     // S^2_x(k), k = 1..n_y
  std::vector<double> var_y;     // S^2_y(k); var_y[n_y-1] == 0 by definition
  std::vector<double> var_total; // var_x + var_y
  std::vector<double> std_err;   // sqrt(var_total)
};

// Delete-one-x-observation jackknife variance at a single k. th must be
// theta_hat(s, k). Requires n_x >= 2 (UndefinedVariance otherwise).
double jackknife_x(const PairedSummary& s, std::uint64_t k, double th,
                   const LogFactorialTable& lf,
                   JackknifeForm form = JackknifeForm::Corrected);

// c_j(k) = C(n_y-j-1, k) / (n_x * C(n_y-1, k)); requires 1 <= k <= n_y - 1.
double c_coeff(const PairedSummary& s, std::uint64_t j, std::uint64_t k,
               const LogFactorialTable& lf);

// sum_j c_j(k) * Q(j); the re-estimate on n_y - 1 draws that the y-jackknife
// recenters around. Requires 1 <= k <= n_y - 1.
double theta_hat_y(const PairedSummary& s, std::uint64_t k, const LogFactorialTable& lf);

// Delete-one-y-observation jackknife variance at a single k; zero at k = n_y.
double jackknife_y(const PairedSummary& s, std::uint64_t k, double th,
                   const LogFactorialTable& lf,
                   JackknifeForm form = JackknifeForm::Corrected);

// All components for k = 1..n_y in O(n_y * (|q| + |m|)).
VarianceSeries jackknife_total(const PairedSummary& s, const DissimilaritySeries& series);

// Closed form of the full-depth standard error:
// S(n_y) = sqrt(theta_ny * (1 - theta_ny) / (n_x - 1)).
double stderr_at_full_depth(double theta_ny, std::uint64_t n_x);

}  // namespace urndis
