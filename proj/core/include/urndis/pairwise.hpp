#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "urndis/count_table.hpp"
#include "urndis/sample.hpp"

namespace urndis {

// Square matrix over sample ids; rows index the x-sample, columns the
// y-sample, diagonal fixed at zero. The dissimilarity is asymmetric, so
// (r, c) and (c, r) generally differ.
struct PairwiseResult {
  std::string metric;  // "theta" | "stderr" | "dderiv"
  std::vector<std::string> ids;
  std::vector<double> values;  // row-major, ids.size()^2

  double at(std::size_t row, std::size_t col) const {
    return values[row * ids.size() + col];
  }
};

struct PairwiseMatrices {
  PairwiseResult theta;    // theta_hat(n_y)
  PairwiseResult std_err;  // S(n_y) = sqrt(theta (1 - theta) / (n_x - 1))
  PairwiseResult dderiv;   // |theta_hat(n_y) - theta_hat(n_y - 1)|
};

// All ordered sample pairs of the table, parallelized over cells. Requires
// at least two samples and every sample total >= 2. Output is deterministic
// for any thread count.
PairwiseMatrices pairwise_matrices(const CountTable& t, unsigned threads = 0);

// CSV with row/column headers; 17 significant digits.
void write_matrix_csv(const PairwiseResult& m, std::ostream& out);

// Per-k curve for one ordered pair: k, theta, var_x, var_y, stderr and the
// successive difference theta(k-1) - theta(k) (empty at k = 1), as CSV.
// Requires n_x >= 2.
void curve_export(const Sample& x, const Sample& y, std::ostream& out);

}  // namespace urndis
