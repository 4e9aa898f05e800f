#include "urndis/pairwise.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>

#include "urndis/detail/parallel.hpp"
#include "urndis/estimator.hpp"
#include "urndis/log_factorial.hpp"
#include "urndis/variance.hpp"

namespace urndis {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PairwiseMatrices pairwise_matrices(const CountTable& t, unsigned threads) {
  const std::size_t ns = t.sample_ids.size();
  if (ns < 2) throw InvalidInput("pairwise needs at least two samples");

  std::vector<Sample> samples;
  samples.reserve(ns);
  for (std::size_t c = 0; c < ns; ++c) {
    samples.push_back(t.column_sample(c));
    if (samples.back().n() < 2)
      throw InvalidInput("sample '" + t.sample_ids[c] + "' has fewer than 2 draws");
  }

  // one shared table per y-sample, reused by every x against it
  std::vector<std::unique_ptr<LogFactorialTable>> tables(ns);
  for (std::size_t c = 0; c < ns; ++c)
    tables[c] = std::make_unique<LogFactorialTable>(samples[c].n());

  PairwiseMatrices out;
  for (PairwiseResult* m : {&out.theta, &out.std_err, &out.dderiv}) {
    m->ids = t.sample_ids;
    m->values.assign(ns * ns, 0.0);
  }
  out.theta.metric = "theta";
  out.std_err.metric = "stderr";
  out.dderiv.metric = "dderiv";

  detail::parallel_for(ns * ns, threads, [&](std::size_t cell) {
    const std::size_t xi = cell / ns;
    const std::size_t yi = cell % ns;
    if (xi == yi) return;  // diagonal stays zero
    const Sample& x = samples[xi];
    const Sample& y = samples[yi];
    const PairedSummary s = summarize_pair(x, y);
    const LogFactorialTable& lf = *tables[yi];
    const double t_ny = theta_hat(s, s.n_y, lf);
    const double t_prev = theta_hat(s, s.n_y - 1, lf);
    out.theta.values[cell] = t_ny;
    out.std_err.values[cell] = stderr_at_full_depth(t_ny, s.n_x);
    out.dderiv.values[cell] = std::abs(t_ny - t_prev);
  });
  return out;
}

void write_matrix_csv(const PairwiseResult& m, std::ostream& out) {
  out << "id";
  for (const auto& id : m.ids) out << ',' << id;
  out << '\n';
  const std::size_t ns = m.ids.size();
  for (std::size_t r = 0; r < ns; ++r) {
    out << m.ids[r];
    for (std::size_t c = 0; c < ns; ++c) out << ',' << g17(m.at(r, c));
    out << '\n';
  }
}

void curve_export(const Sample& x, const Sample& y, std::ostream& out) {
  const PairedSummary s = summarize_pair(x, y);
  if (s.n_x < 2) throw UndefinedVariance("curve export requires n_x >= 2");
  const DissimilaritySeries series = theta_hat_all(s);
  const VarianceSeries vs = jackknife_total(s, series);

  out << "k,theta,var_x,var_y,stderr,diff\n";
  for (std::uint64_t k = 1; k <= s.n_y; ++k) {
    out << k << ',' << g17(series.theta[k - 1]) << ',' << g17(vs.var_x[k - 1]) << ','
        << g17(vs.var_y[k - 1]) << ',' << g17(vs.std_err[k - 1]) << ',';
    if (k >= 2) out << g17(series.theta[k - 2] - series.theta[k - 1]);
    out << '\n';
  }
}

}  // namespace urndis
