#include "urndis/variance.hpp"

#include <algorithm>
#include <cmath>

namespace urndis {

double jackknife_x(const PairedSummary& s, std::uint64_t k, double th,
                   const LogFactorialTable& lf, JackknifeForm form) {
  if (s.n_x < 2) throw UndefinedVariance("jackknife_x requires n_x >= 2");
  if (k < 1 || k > s.n_y) throw DomainError("jackknife_x: k outside [1, n_y]");
  double acc = 0.0;
  for (const auto& [j, qj] : s.q) {
    if (form == JackknifeForm::Literal && j + k > s.n_y) continue;
    const double d = binom_ratio(lf, s.n_y, j, k) - th;
    acc += static_cast<double>(qj) * d * d;
  }
  const double nx = static_cast<double>(s.n_x);
  return acc / (nx * (nx - 1.0));
}

double c_coeff(const PairedSummary& s, std::uint64_t j, std::uint64_t k,
               const LogFactorialTable& lf) {
  if (k < 1 || k + 1 > s.n_y) throw DomainError("c_coeff: k outside [1, n_y - 1]");
  return binom_ratio(lf, s.n_y - 1, j, k) / static_cast<double>(s.n_x);
}

double theta_hat_y(const PairedSummary& s, std::uint64_t k, const LogFactorialTable& lf) {
  if (k < 1 || k + 1 > s.n_y) throw DomainError("theta_hat_y: k outside [1, n_y - 1]");
  double acc = 0.0;
  for (const auto& [j, qj] : s.q)
    acc += c_coeff(s, j, k, lf) * static_cast<double>(qj);
  return acc;
}

double jackknife_y(const PairedSummary& s, std::uint64_t k, double th,
                   const LogFactorialTable& lf, JackknifeForm form) {
  if (k < 1 || k > s.n_y) throw DomainError("jackknife_y: k outside [1, n_y]");
  if (k == s.n_y) return 0.0;
  const double nx = static_cast<double>(s.n_x);
  const double thy = theta_hat_y(s, k, lf);
  double acc = 0.0;
  for (const MEntry& e : s.m) {
    if (e.j == 0) continue;
    if (form == JackknifeForm::Literal && (e.i == 0 || e.j + k > s.n_y)) continue;
    const double cjm1 = binom_ratio(lf, s.n_y - 1, e.j - 1, k) / nx;
    const double cj = binom_ratio(lf, s.n_y - 1, e.j, k) / nx;
    const double d = static_cast<double>(e.i) * (cjm1 - cj) + thy - th;
    acc += static_cast<double>(e.j) * static_cast<double>(e.colors) * d * d;
  }
  const double ny = static_cast<double>(s.n_y);
  return acc * (ny - 1.0) / ny;
}

VarianceSeries jackknife_total(const PairedSummary& s, const DissimilaritySeries& series) {
  if (s.n_x < 2) throw UndefinedVariance("jackknife_total requires n_x >= 2");
  if (series.n_x != s.n_x || series.n_y != s.n_y ||
      series.theta.size() != s.n_y)
    throw DomainError("jackknife_total: series does not match summary");

  const std::uint64_t ny = s.n_y;
  const double nx = static_cast<double>(s.n_x);

  VarianceSeries out;
  out.n_x = s.n_x;
  out.n_y = ny;
  out.var_x.assign(ny, 0.0);
  out.var_y.assign(ny, 0.0);
  out.var_total.assign(ny, 0.0);
  out.std_err.assign(ny, 0.0);

  // Running ratios C(n_y-j, k)/C(n_y, k) for the j's stored in q.
  std::vector<double> rq(s.q.size(), 1.0);

  // Running ratios over n = n_y - 1 for every j needed by c_j(k): the j's in
  // q plus j and j-1 for every m-entry with j >= 1.
  std::vector<std::uint64_t> jc;
  jc.reserve(s.q.size() + 2 * s.m.size());
  for (const auto& [j, qj] : s.q) jc.push_back(j);
  for (const MEntry& e : s.m) {
    if (e.j == 0) continue;
    jc.push_back(e.j);
    jc.push_back(e.j - 1);
  }
  std::sort(jc.begin(), jc.end());
  jc.erase(std::unique(jc.begin(), jc.end()), jc.end());
  auto jc_index = [&jc](std::uint64_t j) {
    return static_cast<std::size_t>(
        std::lower_bound(jc.begin(), jc.end(), j) - jc.begin());
  };
  std::vector<std::size_t> q_idx(s.q.size());
  for (std::size_t t = 0; t < s.q.size(); ++t) q_idx[t] = jc_index(s.q[t].first);
  std::vector<std::pair<std::size_t, std::size_t>> m_idx(s.m.size());
  for (std::size_t t = 0; t < s.m.size(); ++t) {
    if (s.m[t].j == 0) continue;
    m_idx[t] = {jc_index(s.m[t].j - 1), jc_index(s.m[t].j)};
  }
  std::vector<double> rc(jc.size(), 1.0);

  for (std::uint64_t k = 1; k <= ny; ++k) {
    const double th = series.theta[k - 1];

    // x side
    double accx = 0.0;
    for (std::size_t t = 0; t < s.q.size(); ++t) {
      const std::uint64_t j = s.q[t].first;
      double& r = rq[t];
      if (j + k > ny)
        r = 0.0;
      else
        r *= static_cast<double>(ny - j - k + 1) / static_cast<double>(ny - k + 1);
      const double d = r - th;
      accx += static_cast<double>(s.q[t].second) * d * d;
    }
    out.var_x[k - 1] = accx / (nx * (nx - 1.0));

    // y side; S^2_y(n_y) := 0
    if (k < ny) {
      const std::uint64_t n1 = ny - 1;
      for (std::size_t t = 0; t < jc.size(); ++t) {
        const std::uint64_t j = jc[t];
        double& r = rc[t];
        if (j + k > n1)
          r = 0.0;
        else
          r *= static_cast<double>(n1 - j - k + 1) / static_cast<double>(n1 - k + 1);
      }
      double thy = 0.0;
      for (std::size_t t = 0; t < s.q.size(); ++t)
        thy += rc[q_idx[t]] / nx * static_cast<double>(s.q[t].second);
      double accy = 0.0;
      for (std::size_t t = 0; t < s.m.size(); ++t) {
        const MEntry& e = s.m[t];
        if (e.j == 0) continue;
        const double cjm1 = rc[m_idx[t].first] / nx;
        const double cj = rc[m_idx[t].second] / nx;
        const double d = static_cast<double>(e.i) * (cjm1 - cj) + thy - th;
        accy += static_cast<double>(e.j) * static_cast<double>(e.colors) * d * d;
      }
      out.var_y[k - 1] = accy * static_cast<double>(ny - 1) / static_cast<double>(ny);
    }

    out.var_total[k - 1] = out.var_x[k - 1] + out.var_y[k - 1];
    out.std_err[k - 1] = std::sqrt(out.var_total[k - 1]);
  }
  return out;
}

double stderr_at_full_depth(double theta_ny, std::uint64_t n_x) {
  if (n_x < 2) throw UndefinedVariance("stderr_at_full_depth requires n_x >= 2");
  return std::sqrt(theta_ny * (1.0 - theta_ny) / static_cast<double>(n_x - 1));
}

}  // namespace urndis
