#include "urndis/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "urndis/estimator.hpp"
#include "urndis/log_factorial.hpp"

namespace urndis {

namespace {

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Overflow-safe count for guard checks: min(C(n, k), cap).
double binom_capped(std::uint64_t n, std::uint64_t k, double cap) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::uint64_t t = 1; t <= k; ++t) {
    r *= static_cast<double>(n - k + t) / static_cast<double>(t);
    if (r > cap) return cap;
  }
  return r;
}

void check_brute_guard(const Sample& y, std::uint64_t k) {
  if (y.n() > kBruteMaxNy)
    throw GuardExceeded("brute-force enumeration limited to n_y <= 12");
  if (k < 1 || k > y.n()) throw DomainError("brute force: k outside [1, n_y]");
}

// Number of (x-draw, k-subset) pairs where the x-color misses the subset.
std::uint64_t kernel_hits(const Sample& x, const std::vector<ColorId>& ydraws,
                          std::uint64_t k) {
  const std::uint64_t ny = ydraws.size();
  std::vector<std::uint64_t> idx(k);
  for (std::uint64_t t = 0; t < k; ++t) idx[t] = t;
  std::uint64_t hits = 0;
  std::vector<ColorId> sub(k);
  while (true) {
    for (std::uint64_t t = 0; t < k; ++t) sub[t] = ydraws[idx[t]];
    for (const auto& [c, m] : x.counts())
      if (std::find(sub.begin(), sub.end(), c) == sub.end()) hits += m;
    // next k-combination of {0..ny-1}
    std::uint64_t t = k;
    while (t > 0 && idx[t - 1] == ny - k + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::uint64_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
  return hits;
}

std::vector<ColorId> expand_draws(const Sample& s) {
  std::vector<ColorId> draws;
  draws.reserve(s.n());
  for (const auto& [c, m] : s.counts())
    for (std::uint64_t t = 0; t < m; ++t) draws.push_back(c);
  return draws;
}

Sample remove_one(const Sample& s, ColorId c) {
  std::vector<std::pair<ColorId, std::uint64_t>> counts;
  counts.reserve(s.counts().size());
  for (const auto& [col, m] : s.counts()) {
    const std::uint64_t keep = (col == c) ? m - 1 : m;
    if (keep > 0) counts.emplace_back(col, keep);
  }
  return Sample(std::move(counts));
}

}  // namespace

double theta_hat_brute(const Sample& x, const Sample& y, std::uint64_t k) {
  check_brute_guard(y, k);
  const std::vector<ColorId> ydraws = expand_draws(y);
  const std::uint64_t num = kernel_hits(x, ydraws, k);
  const std::uint64_t den = x.n() * binom_u64(y.n(), k);
  return static_cast<double>(num) / static_cast<double>(den);
}

JackknifeBrute jackknife_brute(const Sample& x, const Sample& y, std::uint64_t k) {
  check_brute_guard(y, k);
  if (x.n() < 2) throw UndefinedVariance("jackknife_brute requires n_x >= 2");
  const double th = theta_hat_brute(x, y, k);

  JackknifeBrute out;
  // delete each x-draw; draws of the same color give the same re-estimate
  double accx = 0.0;
  for (const auto& [c, m] : x.counts()) {
    const double ti = theta_hat_brute(remove_one(x, c), y, k);
    const double d = ti - th;
    accx += static_cast<double>(m) * d * d;
  }
  const double nx = static_cast<double>(x.n());
  out.var_x = accx * (nx - 1.0) / nx;

  // delete each y-draw; k-subsets now come from the remaining n_y - 1 draws
  if (k == y.n()) {
    out.var_y = 0.0;  // no k-subset exists after a deletion
  } else {
    double accy = 0.0;
    for (const auto& [c, m] : y.counts()) {
      const double tr = theta_hat_brute(x, remove_one(y, c), k);
      const double d = tr - th;
      accy += static_cast<double>(m) * d * d;
    }
    const double ny = static_cast<double>(y.n());
    out.var_y = accy * (ny - 1.0) / ny;
  }
  return out;
}

double xi_1j_exact(const UrnPair& u, std::uint64_t j, std::uint64_t k) {
  if (j > k) throw DomainError("xi_1j_exact requires j <= k");
  const double t = theta_exact(u, k);
  const double v = theta_exact(u, 2 * k - j) - t * t;
  return v < 0.0 ? 0.0 : v;
}

double xi_0j_exact(const UrnPair& u, std::uint64_t j, std::uint64_t k) {
  if (j > k) throw DomainError("xi_0j_exact requires j <= k");
  if (j == 0) return 0.0;

  const auto& ye = u.y.entries();
  const std::size_t s = ye.size();
  // multisets of size j over the y-support
  if (binom_capped(j + s - 1, j, 1.5e6) > 1e6)
    throw GuardExceeded("xi_0j_exact: multiset enumeration too large");

  const double tk = theta_exact(u, k);

  // x-side view: probability, (1 - P_y)^(k-j), and index into y-support (or
  // npos when the color is absent from urn-y).
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct XColor {
    double px;
    double pw;
    std::size_t yidx;
  };
  std::vector<XColor> xs;
  xs.reserve(u.x.entries().size());
  for (const auto& [c, px] : u.x.entries()) {
    const double py = u.y.prob(c);
    std::size_t yidx = npos;
    if (py > 0.0) {
      auto it = std::lower_bound(ye.begin(), ye.end(), c,
                                 [](const auto& e, ColorId v) { return e.first < v; });
      yidx = static_cast<std::size_t>(it - ye.begin());
    }
    xs.push_back({px, std::pow(1.0 - py, static_cast<double>(k - j)), yidx});
  }

  LogFactorialTable lf(j);
  std::vector<double> logp(s);
  for (std::size_t i = 0; i < s; ++i) logp[i] = std::log(ye[i].second);

  std::vector<std::uint64_t> mult(s, 0);
  double e2 = 0.0;

  // recursive composition of j into s parts
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos,
                                                            std::uint64_t left) {
    if (pos + 1 == s) {
      mult[pos] = left;
      double logw = lf.value(j);
      for (std::size_t i = 0; i < s; ++i) {
        if (mult[i] == 0) continue;
        logw -= lf.value(mult[i]);
        logw += static_cast<double>(mult[i]) * logp[i];
      }
      const double w = std::exp(logw);
      double v = 0.0;
      for (const XColor& xc : xs)
        if (xc.yidx == npos || mult[xc.yidx] == 0) v += xc.px * xc.pw;
      e2 += w * v * v;
      return;
    }
    for (std::uint64_t m = 0; m <= left; ++m) {
      mult[pos] = m;
      rec(pos + 1, left - m);
    }
  };
  rec(0, j);

  const double var = e2 - tk * tk;
  return var < 0.0 ? 0.0 : var;
}

double hoeffding_variance_exact(const UrnPair& u, std::uint64_t n_x, std::uint64_t n_y,
                                std::uint64_t k) {
  if (n_x < 1 || n_y < 1) throw DomainError("hoeffding_variance_exact: empty samples");
  if (k < 1 || k > n_y) throw DomainError("hoeffding_variance_exact: k outside [1, n_y]");
  LogFactorialTable lf(n_y);
  const std::uint64_t jmin = (2 * k > n_y) ? 2 * k - n_y : 0;
  double acc = 0.0;
  for (std::uint64_t j = jmin; j <= k; ++j) {
    // weight C(k,j) C(n_y-k, k-j) / C(n_y, k); zero-weight j skipped by jmin
    const double logw =
        lf.log_binom(k, j) + lf.log_binom(n_y - k, k - j) - lf.log_binom(n_y, k);
    const double w = std::exp(logw);
    acc += w * (static_cast<double>(n_x - 1) * xi_0j_exact(u, j, k) +
                xi_1j_exact(u, j, k));
  }
  return acc / static_cast<double>(n_x);
}

double projection_variance(const UrnPair& u, std::uint64_t n_x, std::uint64_t n_y,
                           std::uint64_t k) {
  if (n_x < 1 || n_y < 1) throw DomainError("projection_variance: empty samples");
  const double kk = static_cast<double>(k);
  return xi_1j_exact(u, 0, k) / static_cast<double>(n_x) +
         kk * kk * xi_0j_exact(u, 1, k) / static_cast<double>(n_y);
}

ExactMoments enumerate_estimator_moments(const UrnPair& u, std::uint64_t n_x,
                                         std::uint64_t n_y, std::uint64_t k) {
  if (n_x < 1 || n_y < 1) throw DomainError("enumerate_estimator_moments: empty sizes");
  if (k < 1 || k > n_y) throw DomainError("enumerate_estimator_moments: k outside [1, n_y]");
  const std::size_t sx = u.x.support_size();
  const std::size_t sy = u.y.support_size();
  const double nmx = binom_capped(n_x + sx - 1, n_x, 1.5e6);
  const double nmy = binom_capped(n_y + sy - 1, n_y, 1.5e6);
  if (nmx * nmy > 1e6)
    throw GuardExceeded("enumerate_estimator_moments: too many datasets");

  LogFactorialTable lf(std::max(n_x, n_y));
  // exact double factorials are fine at enumeration sizes
  auto multinomial_weight = [&lf](const std::vector<std::uint64_t>& m,
                                  const std::vector<double>& probs, std::uint64_t n) {
    double logw = lf.value(n);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      logw -= lf.value(m[i]);
      logw += static_cast<double>(m[i]) * std::log(probs[i]);
    }
    return std::exp(logw);
  };

  std::vector<double> pxs, pys;
  std::vector<ColorId> cxs, cys;
  for (const auto& [c, p] : u.x.entries()) {
    cxs.push_back(c);
    pxs.push_back(p);
  }
  for (const auto& [c, p] : u.y.entries()) {
    cys.push_back(c);
    pys.push_back(p);
  }

  // enumerate compositions of n over s parts
  auto each_composition = [](std::uint64_t n, std::size_t s,
                             const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    std::vector<std::uint64_t> m(s, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos,
                                                              std::uint64_t left) {
      if (pos + 1 == s) {
        m[pos] = left;
        fn(m);
        return;
      }
      for (std::uint64_t v = 0; v <= left; ++v) {
        m[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, n);
  };

  double mean = 0.0, m2 = 0.0;
  each_composition(n_x, sx, [&](const std::vector<std::uint64_t>& mx) {
    const double wx = multinomial_weight(mx, pxs, n_x);
    std::vector<std::pair<ColorId, std::uint64_t>> xcounts;
    for (std::size_t i = 0; i < sx; ++i)
      if (mx[i] > 0) xcounts.emplace_back(cxs[i], mx[i]);
    const Sample xsample(std::move(xcounts));
    each_composition(n_y, sy, [&](const std::vector<std::uint64_t>& my) {
      const double w = wx * multinomial_weight(my, pys, n_y);
      std::vector<std::pair<ColorId, std::uint64_t>> ycounts;
      for (std::size_t i = 0; i < sy; ++i)
        if (my[i] > 0) ycounts.emplace_back(cys[i], my[i]);
      const Sample ysample(std::move(ycounts));
      const double t = theta_hat(summarize_pair(xsample, ysample), k, lf);
      mean += w * t;
      m2 += w * t * t;
    });
  });

  ExactMoments out;
  out.mean = mean;
  out.variance = std::max(0.0, m2 - mean * mean);
  return out;
}

}  // namespace urndis
