#include <doctest.h>

#include <cmath>

#include "urndis/estimator.hpp"
#include "urndis/oracle.hpp"
#include "urndis/rng.hpp"
#include "urndis/selfcheck.hpp"
#include "urndis/variance.hpp"

using namespace urndis;

namespace {

struct Fixture {
  Sample x{{{1, 1}, {2, 1}}};
  Sample y{{{1, 2}, {3, 1}}};
  PairedSummary s = summarize_pair(x, y);
  LogFactorialTable lf{3};
  DissimilaritySeries series = theta_hat_all(s);
};

}  // namespace

TEST_CASE("fixture jackknife values") {
  Fixture f;
  CHECK(jackknife_x(f.s, 1, f.series.theta[0], f.lf) ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  CHECK(jackknife_x(f.s, 3, f.series.theta[2], f.lf) ==
        doctest::Approx(0.25).epsilon(1e-13));
  CHECK(jackknife_y(f.s, 1, f.series.theta[0], f.lf) ==
        doctest::Approx(1.0 / 36.0).epsilon(1e-13));
  CHECK(jackknife_y(f.s, 2, f.series.theta[1], f.lf) == doctest::Approx(0.0));
  CHECK(jackknife_y(f.s, 3, f.series.theta[2], f.lf) == 0.0);  // k = n_y

  CHECK(c_coeff(f.s, 0, 1, f.lf) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(c_coeff(f.s, 1, 1, f.lf) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(c_coeff(f.s, 2, 1, f.lf) == 0.0);
  CHECK(theta_hat_y(f.s, 1, f.lf) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(theta_hat_y(f.s, 2, f.lf) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(c_coeff(f.s, 0, 3, f.lf), DomainError);  // k must be < n_y

  const VarianceSeries vs = jackknife_total(f.s, f.series);
  CHECK(vs.var_total[0] == doctest::Approx(5.0 / 36.0).epsilon(1e-13));
  CHECK(vs.std_err[2] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(vs.var_y[2] == 0.0);
}

TEST_CASE("literal summation ranges disagree with the deleted-sample values") {
  // The printed formulas drop zero-ratio terms; these are the wrong values
  // they produce on the fixture, kept to document the difference.
  Fixture f;
  CHECK(jackknife_x(f.s, 3, f.series.theta[2], f.lf, JackknifeForm::Literal) ==
        doctest::Approx(1.0 / 8.0).epsilon(1e-13));
  CHECK(jackknife_y(f.s, 1, f.series.theta[0], f.lf, JackknifeForm::Literal) ==
        doctest::Approx(1.0 / 108.0).epsilon(1e-13));
}

TEST_CASE("disjoint pair has zero variance") {
  const Sample x({{5, 3}});
  const Sample y({{7, 4}});
  const PairedSummary s = summarize_pair(x, y);
  const LogFactorialTable lf(s.n_y);
  const DissimilaritySeries series = theta_hat_all(s);
  const VarianceSeries vs = jackknife_total(s, series);
  for (std::uint64_t k = 1; k <= 4; ++k) {
    CHECK(vs.var_x[k - 1] == 0.0);
    CHECK(vs.var_y[k - 1] == 0.0);
  }
  // the n_y - 1 re-estimate is also 1 on disjoint supports
  for (std::uint64_t k = 1; k <= 3; ++k)
    CHECK(theta_hat_y(s, k, lf) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("n_x < 2 is rejected") {
  const PairedSummary s = summarize_pair(Sample({{1, 1}}), Sample({{2, 2}}));
  const LogFactorialTable lf(2);
  const DissimilaritySeries series = theta_hat_all(s);
  CHECK_THROWS_AS(jackknife_x(s, 1, series.theta[0], lf), UndefinedVariance);
  CHECK_THROWS_AS(jackknife_total(s, series), UndefinedVariance);
  CHECK_THROWS_AS(stderr_at_full_depth(0.5, 1), UndefinedVariance);
}

TEST_CASE("deleted-sample oracle equivalence") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const Sample x = random_sample(rng, 2, 6, 5);
    const Sample y = random_sample(rng, 1, 8, 5);
    const PairedSummary s = summarize_pair(x, y);
    const LogFactorialTable lf(s.n_y);
    for (std::uint64_t k = 1; k <= s.n_y; ++k) {
      const JackknifeBrute brute = jackknife_brute(x, y, k);
      const double th = theta_hat(s, k, lf);
      CHECK(std::abs(jackknife_x(s, k, th, lf) - brute.var_x) <= 1e-12);
      CHECK(std::abs(jackknife_y(s, k, th, lf) - brute.var_y) <= 1e-12);
    }
  }
}

TEST_CASE("series path matches point evaluation") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Sample x = random_sample(rng, 2, 60, 10);
    const Sample y = random_sample(rng, 2, 60, 10);
    const PairedSummary s = summarize_pair(x, y);
    const LogFactorialTable lf(s.n_y);
    const DissimilaritySeries series = theta_hat_all(s);
    const VarianceSeries vs = jackknife_total(s, series);
    for (std::uint64_t k = 1; k <= s.n_y; ++k) {
      const double th = series.theta[k - 1];
      CHECK(std::abs(vs.var_x[k - 1] - jackknife_x(s, k, th, lf)) <= 1e-12);
      CHECK(std::abs(vs.var_y[k - 1] - jackknife_y(s, k, th, lf)) <= 1e-12);
      CHECK(vs.var_x[k - 1] >= 0.0);
      CHECK(vs.var_y[k - 1] >= 0.0);
    }
    CHECK(vs.var_y.back() == 0.0);
    const double closed = stderr_at_full_depth(series.theta.back(), s.n_x);
    CHECK(std::abs(vs.std_err.back() - closed) <= 1e-12);
  }
}

TEST_CASE("full-depth standard error closed form") {
  // worked values from published sample comparisons
  CHECK(std::abs(stderr_at_full_depth(0.9998, 5054) - 1.9892e-4) <= 1e-7);
  CHECK(std::abs(stderr_at_full_depth(0.0499, 12747) - 1.9286e-3) <= 1e-7);
  CHECK(std::abs(stderr_at_full_depth(0.0324, 6206) - 2.2477e-3) <= 1e-7);
}
