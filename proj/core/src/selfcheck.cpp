#include "urndis/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "urndis/estimator.hpp"
#include "urndis/log_factorial.hpp"
#include "urndis/oracle.hpp"
#include "urndis/variance.hpp"

namespace urndis {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

Sample fixture_x() { return Sample({{1, 1}, {2, 1}}); }
Sample fixture_y() { return Sample({{1, 2}, {3, 1}}); }

std::vector<UrnPair> urn_battery() {
  std::vector<UrnPair> urns;
  urns.push_back({Urn({{1, 0.5}, {2, 0.5}}), Urn({{1, 0.5}, {2, 0.5}})});
  urns.push_back({Urn({{1, 0.4}, {2, 0.3}, {3, 0.3}}), Urn({{1, 0.5}, {2, 0.25}, {4, 0.25}})});
  urns.push_back({Urn({{1, 1.0}}), Urn({{1, 0.3}, {2, 0.7}})});
  urns.push_back({Urn({{1, 0.2}, {2, 0.8}}), Urn({{3, 1.0}})});
  urns.push_back({Urn({{1, 0.6}, {2, 0.4}}), Urn({{1, 0.1}, {2, 0.9}})});
  return urns;
}

}  // namespace

Sample random_sample(SplitMix64& rng, std::uint64_t n_min, std::uint64_t n_max,
                     std::uint64_t alphabet) {
  const std::uint64_t n = rng.next_range(n_min, n_max);
  std::vector<ColorId> draws(n);
  for (std::uint64_t t = 0; t < n; ++t) draws[t] = rng.next_range(1, alphabet);
  return Sample::from_draws(draws);
}

std::vector<CheckResult> run_selfchecks(std::uint64_t seed, std::size_t pairs) {
  std::vector<CheckResult> results;

  // 1. kernel equivalence on random pairs
  {
    SplitMix64 rng(derive_stream_seed(seed, 1));
    double worst = 0.0;
    for (std::size_t p = 0; p < pairs; ++p) {
      const Sample x = random_sample(rng, 1, 6, 5);
      const Sample y = random_sample(rng, 1, 8, 5);
      const PairedSummary s = summarize_pair(x, y);
      const LogFactorialTable lf(s.n_y);
      const DissimilaritySeries series = theta_hat_all(s);
      for (std::uint64_t k = 1; k <= s.n_y; ++k) {
        const double brute = theta_hat_brute(x, y, k);
        worst = std::max(worst, std::abs(theta_hat(s, k, lf) - brute));
        worst = std::max(worst, std::abs(series.theta[k - 1] - brute));
      }
    }
    results.push_back({"kernel-equivalence", worst <= 1e-12, "max |delta| = " + fmt(worst)});
  }

  // 2. jackknife equivalence on random pairs with n_x >= 2
  {
    SplitMix64 rng(derive_stream_seed(seed, 2));
    double worst = 0.0;
    for (std::size_t p = 0; p < pairs; ++p) {
      const Sample x = random_sample(rng, 2, 6, 5);
      const Sample y = random_sample(rng, 1, 8, 5);
      const PairedSummary s = summarize_pair(x, y);
      const LogFactorialTable lf(s.n_y);
      const DissimilaritySeries series = theta_hat_all(s);
      const VarianceSeries vs = jackknife_total(s, series);
      for (std::uint64_t k = 1; k <= s.n_y; ++k) {
        const JackknifeBrute brute = jackknife_brute(x, y, k);
        const double th = theta_hat(s, k, lf);
        worst = std::max(worst, std::abs(jackknife_x(s, k, th, lf) - brute.var_x));
        worst = std::max(worst, std::abs(jackknife_y(s, k, th, lf) - brute.var_y));
        worst = std::max(worst, std::abs(vs.var_x[k - 1] - brute.var_x));
        worst = std::max(worst, std::abs(vs.var_y[k - 1] - brute.var_y));
      }
    }
    results.push_back({"jackknife-equivalence", worst <= 1e-12, "max |delta| = " + fmt(worst)});
  }

  // 3. hand-computed fixture
  {
    const Sample x = fixture_x();
    const Sample y = fixture_y();
    const PairedSummary s = summarize_pair(x, y);
    const LogFactorialTable lf(s.n_y);
    const DissimilaritySeries series = theta_hat_all(s);
    double worst = 0.0;
    auto note = [&worst](double got, double want) {
      worst = std::max(worst, std::abs(got - want));
    };
    note(series.theta[0], 2.0 / 3.0);
    note(series.theta[1], 0.5);
    note(series.theta[2], 0.5);
    note(jackknife_x(s, 1, series.theta[0], lf), 1.0 / 9.0);
    note(jackknife_y(s, 1, series.theta[0], lf), 1.0 / 36.0);
    note(jackknife_x(s, 3, series.theta[2], lf), 0.25);
    note(jackknife_y(s, 2, series.theta[1], lf), 0.0);
    note(theta_hat_y(s, 1, lf), 0.5);
    note(c_coeff(s, 0, 1, lf), 0.5);
    note(c_coeff(s, 1, 1, lf), 0.25);
    results.push_back({"fixture", worst <= 1e-12, "max |delta| = " + fmt(worst)});
  }

  // 4. exhaustive unbiasedness and Hoeffding variance
  {
    double worst_mean = 0.0, worst_var = 0.0;
    for (const UrnPair& u : urn_battery()) {
      for (std::uint64_t nx = 1; nx <= 3; ++nx) {
        for (std::uint64_t ny = 1; ny <= 4; ++ny) {
          for (std::uint64_t k = 1; k <= ny; ++k) {
            const ExactMoments m = enumerate_estimator_moments(u, nx, ny, k);
            worst_mean = std::max(worst_mean, std::abs(m.mean - theta_exact(u, k)));
            worst_var = std::max(
                worst_var, std::abs(m.variance - hoeffding_variance_exact(u, nx, ny, k)));
          }
        }
      }
    }
    results.push_back({"unbiasedness", worst_mean <= 1e-12, "max |delta| = " + fmt(worst_mean)});
    results.push_back(
        {"hoeffding-variance", worst_var <= 1e-12, "max |delta| = " + fmt(worst_var)});
  }

  // 5. series identities on random pairs
  {
    SplitMix64 rng(derive_stream_seed(seed, 5));
    bool ok = true;
    std::string why = "all identities hold";
    for (std::size_t p = 0; p < pairs && ok; ++p) {
      const Sample x = random_sample(rng, 2, 40, 8);
      const Sample y = random_sample(rng, 1, 40, 8);
      const PairedSummary s = summarize_pair(x, y);
      const DissimilaritySeries series = theta_hat_all(s);
      const VarianceSeries vs = jackknife_total(s, series);
      const std::uint64_t ny = s.n_y;
      for (std::uint64_t k = 1; k <= ny && ok; ++k) {
        const double th = series.theta[k - 1];
        if (th < 0.0 || th > 1.0) { ok = false; why = "theta outside [0,1]"; }
        if (k < ny && series.theta[k] > th) { ok = false; why = "theta not monotone"; }
        if (vs.var_x[k - 1] < 0.0 || vs.var_y[k - 1] < 0.0) {
          ok = false;
          why = "negative variance component";
        }
      }
      const double q0_over_nx =
          static_cast<double>(s.q0()) / static_cast<double>(s.n_x);
      if (series.theta[ny - 1] != q0_over_nx) { ok = false; why = "theta(n_y) != Q(0)/n_x"; }
      if (vs.var_y[ny - 1] != 0.0) { ok = false; why = "S^2_y(n_y) != 0"; }
      const double closed = stderr_at_full_depth(series.theta[ny - 1], s.n_x);
      if (std::abs(vs.std_err[ny - 1] - closed) > 1e-12) {
        ok = false;
        why = "stderr(n_y) closed form violated";
      }
    }
    results.push_back({"series-identities", ok, why});
  }

  return results;
}

}  // namespace urndis
