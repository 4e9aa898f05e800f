#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "urndis/errors.hpp"
#include "urndis/sample.hpp"

namespace urndis {

// A fully known finite discrete distribution over colors. Probabilities are
// strictly positive and sum to 1 within tol.
class Urn {
 public:
  explicit Urn(std::vector<std::pair<ColorId, double>> probs, double tol = 1e-12);

  // Validates the raw sum to within tol, then rescales so the constructor's
  // 1e-12 invariant holds regardless of the support size.
  static Urn normalized(std::vector<std::pair<ColorId, double>> probs, double tol = 1e-9);

  // Probability of a color, 0 if outside the support.
  double prob(ColorId c) const noexcept;

  const std::vector<std::pair<ColorId, double>>& entries() const noexcept {
    return entries_;
  }
  std::size_t support_size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::pair<ColorId, double>> entries_;  // sorted by color
};

struct UrnPair {
  Urn x;
  Urn y;
};

// theta(k) = sum_i P_x(i) (1 - P_y(i))^k: probability that a draw from urn-x
// has a color unseen in k draws from urn-y. Requires k >= 1.
double theta_exact(const UrnPair& u, std::uint64_t k);

// theta(inf) = P_x(colors absent from urn-y); the k -> infinity limit.
double theta_infinity(const UrnPair& u);

}  // namespace urndis
