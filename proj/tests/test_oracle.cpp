#include <doctest.h>

#include <cmath>
#include <vector>

#include "urndis/oracle.hpp"
#include "urndis/urn.hpp"

using namespace urndis;

namespace {

std::vector<UrnPair> battery() {
  std::vector<UrnPair> urns;
  urns.push_back({Urn({{1, 0.5}, {2, 0.5}}), Urn({{1, 0.5}, {2, 0.5}})});
  urns.push_back({Urn({{1, 0.4}, {2, 0.3}, {3, 0.3}}), Urn({{1, 0.5}, {2, 0.25}, {4, 0.25}})});
  urns.push_back({Urn({{1, 1.0}}), Urn({{1, 0.3}, {2, 0.7}})});
  urns.push_back({Urn({{1, 0.2}, {2, 0.8}}), Urn({{3, 1.0}})});
  urns.push_back({Urn({{1, 0.6}, {2, 0.4}}), Urn({{1, 0.1}, {2, 0.9}})});
  return urns;
}

}  // namespace

TEST_CASE("urn construction") {
  CHECK_THROWS_AS(Urn({}), InvalidInput);
  CHECK_THROWS_AS(Urn({{1, 0.5}, {2, 0.4}}), InvalidInput);        // sums to 0.9
  CHECK_THROWS_AS(Urn({{1, 1.0}, {1, 0.0}}), InvalidInput);        // nonpositive
  CHECK_THROWS_AS(Urn({{1, 0.5}, {1, 0.5}}), InvalidInput);        // duplicate color
  const Urn u = Urn::normalized({{1, 2.0}, {2, 6.0}}, 10.0);       // loose tol, rescaled
  CHECK(u.prob(1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(u.prob(3) == 0.0);
}

TEST_CASE("theta_exact and theta_infinity") {
  // perturbation example: P_x(1)=1, P_y(1)=eps
  for (double eps : {0.0, 0.01, 0.3}) {
    std::vector<std::pair<ColorId, double>> py;
    if (eps > 0.0) py.emplace_back(1, eps);
    py.emplace_back(2, 1.0 - eps);
    const UrnPair u{Urn({{1, 1.0}}), Urn(std::move(py))};
    for (std::uint64_t k : {1, 5, 20})
      CHECK(theta_exact(u, k) ==
            doctest::Approx(std::pow(1.0 - eps, double(k))).epsilon(1e-13));
    CHECK(theta_infinity(u) == (eps == 0.0 ? 1.0 : 0.0));
  }

  const UrnPair same{Urn({{1, 1.0}}), Urn({{1, 1.0}})};
  CHECK(theta_exact(same, 7) == 0.0);
  CHECK(theta_infinity(same) == 0.0);

  const UrnPair disjoint{Urn({{1, 1.0}}), Urn({{2, 1.0}})};
  CHECK(theta_exact(disjoint, 3) == 1.0);
  CHECK(theta_infinity(disjoint) == 1.0);

  const UrnPair half{Urn({{1, 0.5}, {2, 0.5}}), Urn({{2, 1.0}})};
  CHECK(theta_infinity(half) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("theta_exact decreases and decays geometrically") {
  const UrnPair u{Urn({{1, 0.6}, {2, 0.4}}), Urn({{1, 0.1}, {2, 0.9}})};
  const double c = 0.1;  // rarest shared color in urn-y
  const double inf = theta_infinity(u);
  double prev = theta_exact(u, 1);
  for (std::uint64_t k = 2; k <= 60; ++k) {
    const double t = theta_exact(u, k);
    CHECK(t < prev);
    prev = t;
  }
  // (theta(k) - theta(inf)) / (1-c)^k tends to the mass of the rarest color
  const double r40 = (theta_exact(u, 40) - inf) / std::pow(1.0 - c, 40.0);
  CHECK(r40 == doctest::Approx(0.6).epsilon(1e-3));
}

TEST_CASE("brute-force estimator") {
  const Sample x({{1, 1}, {2, 1}});
  const Sample y({{1, 2}, {3, 1}});
  CHECK(theta_hat_brute(x, y, 1) == doctest::Approx(4.0 / 6.0).epsilon(1e-15));
  CHECK(theta_hat_brute(x, y, 2) == doctest::Approx(3.0 / 6.0).epsilon(1e-15));
  CHECK(theta_hat_brute(x, y, 3) == doctest::Approx(0.5).epsilon(1e-15));

  const Sample x1({{9, 1}});
  for (std::uint64_t k = 1; k <= 3; ++k) CHECK(theta_hat_brute(x1, y, k) == 1.0);

  CHECK_THROWS_AS(theta_hat_brute(x, Sample({{1, 13}}), 1), GuardExceeded);
  CHECK_THROWS_AS(theta_hat_brute(x, y, 0), DomainError);
  CHECK_THROWS_AS(theta_hat_brute(x, y, 4), DomainError);
}

TEST_CASE("brute-force jackknife") {
  const Sample x({{1, 1}, {2, 1}});
  const Sample y({{1, 2}, {3, 1}});
  const JackknifeBrute k1 = jackknife_brute(x, y, 1);
  CHECK(k1.var_x == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  CHECK(k1.var_y == doctest::Approx(1.0 / 36.0).epsilon(1e-13));
  const JackknifeBrute k3 = jackknife_brute(x, y, 3);
  CHECK(k3.var_x == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(k3.var_y == 0.0);

  const JackknifeBrute dj = jackknife_brute(Sample({{5, 3}}), Sample({{7, 4}}), 2);
  CHECK(dj.var_x == 0.0);
  CHECK(dj.var_y == 0.0);

  CHECK_THROWS_AS(jackknife_brute(Sample({{1, 1}}), y, 1), UndefinedVariance);
}

TEST_CASE("xi coefficients") {
  const UrnPair same{Urn({{1, 1.0}}), Urn({{1, 1.0}})};
  CHECK(xi_1j_exact(same, 1, 1) == 0.0);
  for (std::uint64_t k = 1; k <= 3; ++k)
    for (std::uint64_t j = 0; j <= k; ++j) {
      CHECK(xi_0j_exact(same, j, k) == doctest::Approx(0.0).epsilon(1e-15));
      CHECK(xi_1j_exact(same, j, k) == doctest::Approx(0.0).epsilon(1e-15));
    }

  // degenerate x-urn: xi_{1,0} always zero
  const double eps = 0.3;
  const UrnPair pert{Urn({{1, 1.0}}), Urn({{1, eps}, {2, 1.0 - eps}})};
  for (std::uint64_t k = 1; k <= 4; ++k)
    CHECK(xi_1j_exact(pert, 0, k) == doctest::Approx(0.0).epsilon(1e-15));
  // two-point conditional at j = k = 1: variance eps(1-eps)
  CHECK(xi_0j_exact(pert, 1, 1) == doctest::Approx(eps * (1 - eps)).epsilon(1e-13));

  const UrnPair sym{Urn({{1, 0.5}, {2, 0.5}}), Urn({{1, 0.5}, {2, 0.5}})};
  CHECK(xi_1j_exact(sym, 0, 1) == doctest::Approx(0.0).epsilon(1e-15));

  CHECK(xi_0j_exact(sym, 0, 5) == 0.0);
  CHECK_THROWS_AS(xi_1j_exact(sym, 2, 1), DomainError);
  CHECK_THROWS_AS(xi_0j_exact(sym, 2, 1), DomainError);
}

TEST_CASE("xi monotonicity in j") {
  for (const UrnPair& u : battery()) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      const double xi0k = xi_0j_exact(u, k, k);
      const double xi1k = xi_1j_exact(u, k, k);
      for (std::uint64_t j = 0; j <= k; ++j) {
        CHECK(xi_0j_exact(u, j, k) <= xi0k + 1e-12);
        CHECK(xi_1j_exact(u, j, k) <= xi1k + 1e-12);
      }
    }
  }
}

TEST_CASE("hoeffding variance against exhaustive enumeration") {
  const UrnPair same{Urn({{1, 1.0}}), Urn({{1, 1.0}})};
  CHECK(hoeffding_variance_exact(same, 3, 4, 2) == doctest::Approx(0.0).epsilon(1e-15));
  const UrnPair disjoint{Urn({{1, 1.0}}), Urn({{2, 1.0}})};
  CHECK(hoeffding_variance_exact(disjoint, 3, 4, 2) ==
        doctest::Approx(0.0).epsilon(1e-15));

  for (const UrnPair& u : battery()) {
    for (std::uint64_t nx : {1, 2, 3}) {
      for (std::uint64_t ny : {1, 2, 3, 4}) {
        for (std::uint64_t k = 1; k <= ny; ++k) {
          const ExactMoments m = enumerate_estimator_moments(u, nx, ny, k);
          CHECK(std::abs(m.mean - theta_exact(u, k)) <= 1e-12);
          CHECK(std::abs(m.variance - hoeffding_variance_exact(u, nx, ny, k)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("projection variance never exceeds the exact variance") {
  for (const UrnPair& u : battery()) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
      const double pv = projection_variance(u, 3, 8, k);
      const double hv = hoeffding_variance_exact(u, 3, 8, k);
      CHECK(pv <= hv + 1e-12);
      CHECK(pv >= 0.0);
    }
  }
  // worked value: degenerate x-urn at k = 1 gives eps(1-eps)/n_y
  const double eps = 0.3;
  const UrnPair pert{Urn({{1, 1.0}}), Urn({{1, eps}, {2, 1.0 - eps}})};
  CHECK(projection_variance(pert, 5, 10, 1) ==
        doctest::Approx(eps * (1 - eps) / 10.0).epsilon(1e-12));
}

TEST_CASE("enumeration guard") {
  const UrnPair u{Urn({{1, 0.5}, {2, 0.5}}), Urn({{1, 0.5}, {2, 0.5}})};
  CHECK_THROWS_AS(enumerate_estimator_moments(u, 2000, 2000, 5), GuardExceeded);
  // guard arithmetic must not overflow at absurd sizes
  CHECK_THROWS_AS(enumerate_estimator_moments(u, 1000000000, 1000000000, 5),
                  GuardExceeded);
  std::vector<std::pair<ColorId, double>> wide;
  for (ColorId c = 1; c <= 40; ++c) wide.emplace_back(c, 1.0 / 40.0);
  const UrnPair uw{Urn({{1, 1.0}}), Urn::normalized(wide)};
  CHECK_THROWS_AS(xi_0j_exact(uw, 500000, 500000), GuardExceeded);
}
