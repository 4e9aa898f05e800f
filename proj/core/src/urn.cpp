#include "urndis/urn.hpp"

#include <algorithm>
#include <cmath>

namespace urndis {

Urn::Urn(std::vector<std::pair<ColorId, double>> probs, double tol)
    : entries_(std::move(probs)) {
  if (entries_.empty()) throw InvalidInput("urn has no colors");
  std::sort(entries_.begin(), entries_.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& [c, p] = entries_[i];
    if (i > 0 && entries_[i - 1].first == c)
      throw InvalidInput("urn lists a color twice");
    if (!(p > 0.0) || !std::isfinite(p))
      throw InvalidInput("urn probabilities must be positive and finite");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol)
    throw InvalidInput("urn probabilities do not sum to 1 within tolerance");
}

Urn Urn::normalized(std::vector<std::pair<ColorId, double>> probs, double tol) {
  double sum = 0.0;
  for (const auto& [c, p] : probs) {
    if (!(p > 0.0) || !std::isfinite(p))
      throw InvalidInput("urn probabilities must be positive and finite");
    sum += p;
  }
  if (probs.empty() || std::abs(sum - 1.0) > tol)
    throw InvalidInput("urn probabilities do not sum to 1 within tolerance");
  for (auto& [c, p] : probs) p /= sum;
  // second pass kills the residual left by the first division
  double sum2 = 0.0;
  for (const auto& [c, p] : probs) sum2 += p;
  for (auto& [c, p] : probs) p /= sum2;
  return Urn(std::move(probs), 1e-12);
}

double Urn::prob(ColorId c) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const auto& e, ColorId v) { return e.first < v; });
  return (it != entries_.end() && it->first == c) ? it->second : 0.0;
}

double theta_exact(const UrnPair& u, std::uint64_t k) {
  if (k < 1) throw DomainError("theta_exact: k must be positive");
  double acc = 0.0;
  for (const auto& [c, px] : u.x.entries())
    acc += px * std::pow(1.0 - u.y.prob(c), static_cast<double>(k));
  return acc;
}

double theta_infinity(const UrnPair& u) {
  double acc = 0.0;
  for (const auto& [c, px] : u.x.entries())
    if (u.y.prob(c) == 0.0) acc += px;
  return acc;
}

}  // namespace urndis
