#include "urndis/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "urndis/detail/parallel.hpp"
#include "urndis/estimator.hpp"
#include "urndis/log_factorial.hpp"
#include "urndis/oracle.hpp"
#include "urndis/variance.hpp"

namespace urndis {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Regularity needed for the normality checks: at least two shared colors in
// differing urn-y proportions, and some x-color absent from urn-y. (Finite
// overlap holds for any finite urn.)
bool regular_for_normality(const UrnPair& u) {
  bool unique_x = false, distinct = false;
  double first = -1.0;
  std::size_t overlap = 0;
  for (const auto& [c, px] : u.x.entries()) {
    const double py = u.y.prob(c);
    if (py == 0.0) {
      unique_x = true;
      continue;
    }
    ++overlap;
    if (first < 0.0)
      first = py;
    else if (py != first)
      distinct = true;
  }
  return overlap >= 2 && distinct && unique_x;
}

void validate(const UrnPair& u, const MonteCarloConfig& cfg) {
  (void)u;
  if (cfg.n_x < 1 || cfg.n_y < 1)
    throw InvalidInput("monte carlo: sample sizes must be positive");
  if (cfg.k_set.empty()) throw InvalidInput("monte carlo: empty k set");
  for (std::uint64_t k : cfg.k_set)
    if (k < 1 || k > cfg.n_y) throw DomainError("monte carlo: k outside [1, n_y]");
}

}  // namespace

Sample sample_from_urn(const Urn& urn, std::uint64_t n, SplitMix64& rng) {
  const auto& entries = urn.entries();
  std::vector<double> cum(entries.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    acc += entries[i].second;
    cum[i] = acc;
  }
  std::vector<std::uint64_t> counts(entries.size(), 0);
  for (std::uint64_t t = 0; t < n; ++t) {
    const double u = rng.next_unit();
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (idx >= entries.size()) idx = entries.size() - 1;
    ++counts[idx];
  }
  std::vector<std::pair<ColorId, std::uint64_t>> out;
  out.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (counts[i] > 0) out.emplace_back(entries[i].first, counts[i]);
  return Sample(std::move(out));
}

MonteCarloSamples monte_carlo_samples(const UrnPair& u, const MonteCarloConfig& cfg) {
  validate(u, cfg);
  if (cfg.replicates < 2) throw InvalidInput("monte carlo: need at least 2 replicates");

  const std::size_t nk = cfg.k_set.size();
  const bool with_jackknife = cfg.n_x >= 2;

  MonteCarloSamples out;
  out.k_set = cfg.k_set;
  out.theta.assign(nk, std::vector<double>(cfg.replicates, 0.0));
  if (with_jackknife)
    out.jackknife.assign(nk, std::vector<double>(cfg.replicates, 0.0));

  const LogFactorialTable lf(cfg.n_y);

  detail::parallel_for(cfg.replicates, cfg.threads, [&](std::size_t r) {
    SplitMix64 rng(derive_stream_seed(cfg.seed, r));
    const Sample x = sample_from_urn(u.x, cfg.n_x, rng);
    const Sample y = sample_from_urn(u.y, cfg.n_y, rng);
    const PairedSummary s = summarize_pair(x, y);
    for (std::size_t ki = 0; ki < nk; ++ki) {
      const std::uint64_t k = cfg.k_set[ki];
      const double t = theta_hat(s, k, lf);
      out.theta[ki][r] = t;
      if (with_jackknife)
        out.jackknife[ki][r] =
            jackknife_x(s, k, t, lf) + jackknife_y(s, k, t, lf);
    }
  });
  return out;
}

std::vector<MonteCarloReport> monte_carlo(const UrnPair& u, const MonteCarloConfig& cfg) {
  if (cfg.replicates < 100)
    throw InvalidInput("monte carlo: need at least 100 replicates");
  const MonteCarloSamples samples = monte_carlo_samples(u, cfg);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<MonteCarloReport> reports;
  reports.reserve(cfg.k_set.size());
  for (std::size_t ki = 0; ki < cfg.k_set.size(); ++ki) {
    const std::uint64_t k = cfg.k_set[ki];
    const std::vector<double>& ts = samples.theta[ki];
    const double r = static_cast<double>(cfg.replicates);

    MonteCarloReport rep;
    rep.k = k;
    rep.replicates = cfg.replicates;
    rep.seed = cfg.seed;

    double mean = 0.0;
    for (double t : ts) mean += t;
    mean /= r;
    double var = 0.0;
    for (double t : ts) var += (t - mean) * (t - mean);
    var /= (r - 1.0);
    rep.mean_theta_hat = mean;
    rep.empirical_variance = var;

    if (!samples.jackknife.empty()) {
      double mj = 0.0;
      for (double v : samples.jackknife[ki]) mj += v;
      rep.mean_jackknife = mj / r;
    } else {
      rep.mean_jackknife = nan;
    }

    rep.exact_theta = theta_exact(u, k);
    rep.exact_variance = hoeffding_variance_exact(u, cfg.n_x, cfg.n_y, k);
    rep.projection_variance = projection_variance(u, cfg.n_x, cfg.n_y, k);

    rep.degenerate = !regular_for_normality(u) || !(rep.exact_variance > 0.0);
    if (rep.exact_variance > 0.0) {
      const double sd = std::sqrt(rep.exact_variance);
      std::vector<double> z(ts.size());
      for (std::size_t i = 0; i < ts.size(); ++i)
        z[i] = (ts[i] - rep.exact_theta) / sd;
      rep.ks_statistic = ks_statistic_normal(std::move(z));
    } else {
      rep.ks_statistic = nan;
    }
    reports.push_back(rep);
  }
  return reports;
}

double ks_statistic_normal(std::vector<double> values) {
  if (values.empty()) throw InvalidInput("ks statistic of empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = normal_cdf(values[i]);
    const double hi = static_cast<double>(i + 1) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

}  // namespace urndis
