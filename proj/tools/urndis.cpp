// Command-line front end: pairwise dissimilarity matrices from OTU count
// tables, per-k curves, convergence heuristics, seeded urn simulations and
// the built-in oracle validation suite.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "urndis/count_table.hpp"
#include "urndis/estimator.hpp"
#include "urndis/heuristics.hpp"
#include "urndis/monte_carlo.hpp"
#include "urndis/pairwise.hpp"
#include "urndis/selfcheck.hpp"
#include "urndis/urn.hpp"
#include "urndis/variance.hpp"
#include "urndis/version.hpp"

namespace {

using nlohmann::json;

unsigned env_threads() {
  const char* v = std::getenv("URNDIS_THREADS");
  if (v == nullptr) return 0;
  const long n = std::strtol(v, nullptr, 10);
  return n > 0 ? static_cast<unsigned>(n) : 0;
}

urndis::CountTable load_table(const std::string& path) {
  if (path == "-") return urndis::parse_count_table(std::cin);
  std::ifstream in(path);
  if (!in) throw urndis::ParseError("cannot open '" + path + "'", 0);
  return urndis::parse_count_table(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

urndis::Sample named_sample(const urndis::CountTable& t, const std::string& id) {
  const auto idx = t.find_sample(id);
  if (!idx) throw std::runtime_error("sample '" + id + "' not found in table");
  return t.column_sample(*idx);
}

json matrix_json(const urndis::PairwiseResult& m) {
  json rows = json::array();
  const std::size_t ns = m.ids.size();
  for (std::size_t r = 0; r < ns; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < ns; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_pairwise(const std::string& table_path, const std::string& prefix,
                 std::uint64_t min_depth, unsigned threads, const std::string& json_path) {
  urndis::CountTable t = load_table(table_path);
  const std::size_t before = t.sample_ids.size();
  t = urndis::filter_min_depth(t, min_depth);
  if (t.sample_ids.size() < before)
    std::cerr << "note: " << before - t.sample_ids.size() << " of " << before
              << " samples below depth " << min_depth << " were dropped\n";
  if (t.sample_ids.empty()) {
    std::cerr << "error: no samples at depth >= " << min_depth << '\n';
    return 1;
  }
  const urndis::PairwiseMatrices m = urndis::pairwise_matrices(t, threads);

  for (const urndis::PairwiseResult* r : {&m.theta, &m.std_err, &m.dderiv}) {
    auto out = open_output(prefix + "_" + r->metric + ".csv");
    urndis::write_matrix_csv(*r, out);
  }
  std::cerr << "wrote " << prefix << "_{theta,stderr,dderiv}.csv for "
            << t.sample_ids.size() << " samples\n";

  if (!json_path.empty()) {
    json env;
    env["version"] = urndis::kVersion;
    env["min_depth"] = min_depth;
    json samples = json::array();
    for (std::size_t c = 0; c < t.sample_ids.size(); ++c)
      samples.push_back({{"id", t.sample_ids[c]}, {"n", t.column_sum(c)}});
    env["samples"] = std::move(samples);
    env["row_is"] = "x-sample";
    env["matrices"] = {{"theta", matrix_json(m.theta)},
                       {"stderr", matrix_json(m.std_err)},
                       {"dderiv", matrix_json(m.dderiv)}};
    auto out = open_output(json_path);
    out << env.dump(2) << '\n';
  }
  return 0;
}

int run_curve(const std::string& table_path, const std::string& x_id,
              const std::string& y_id, const std::string& out_path) {
  const urndis::CountTable t = load_table(table_path);
  const urndis::Sample x = named_sample(t, x_id);
  const urndis::Sample y = named_sample(t, y_id);
  if (out_path.empty()) {
    urndis::curve_export(x, y, std::cout);
  } else {
    auto out = open_output(out_path);
    urndis::curve_export(x, y, out);
  }
  return 0;
}

int run_heuristics(const std::string& table_path, const std::string& x_id,
                   const std::string& y_id, std::uint64_t k_lo, std::uint64_t k_hi,
                   const std::string& out_path) {
  const urndis::CountTable t = load_table(table_path);
  const urndis::Sample x = named_sample(t, x_id);
  const urndis::Sample y = named_sample(t, y_id);
  const urndis::PairedSummary s = urndis::summarize_pair(x, y);
  const urndis::DissimilaritySeries series = urndis::theta_hat_all(s);

  const auto window = urndis::default_regression_window(s.n_y);
  if (k_lo == 0) k_lo = window.first;
  if (k_hi == 0) k_hi = window.second;
  const urndis::RegressionReport rep = urndis::rho_regression(series, k_lo, k_hi);

  const double theta_ny = series.theta[s.n_y - 1];
  const double se = urndis::stderr_at_full_depth(theta_ny, s.n_x);
  const double dderiv =
      s.n_y >= 2 ? series.theta[s.n_y - 1] - series.theta[s.n_y - 2] : 0.0;

  json rep_json = {{"slope", rep.slope},
                   {"intercept", rep.intercept},
                   {"rho_hat", rep.rho_hat},
                   {"rho_hat_pow_ny", rep.rho_hat_pow_ny},
                   {"max_abs_residual", rep.max_abs_residual},
                   {"k_lo", rep.k_lo},
                   {"k_hi", rep.k_hi},
                   {"points_used", rep.points_used},
                   {"points_dropped", rep.points_dropped},
                   {"degenerate", rep.degenerate}};
  json out = {{"version", urndis::kVersion},
              {"x", x_id},
              {"y", y_id},
              {"n_x", s.n_x},
              {"n_y", s.n_y},
              {"theta_ny", theta_ny},
              {"stderr_ny", se},
              {"stderr_over_theta", theta_ny > 0 ? se / theta_ny : 0.0},
              // normal-approximation interval for the k = n_y estimand
              {"ci95_lo", std::max(0.0, theta_ny - 1.959963984540054 * se)},
              {"ci95_hi", std::min(1.0, theta_ny + 1.959963984540054 * se)},
              {"dderiv_ny", dderiv},
              {"regression", std::move(rep_json)}};
  if (out_path.empty()) {
    std::cout << out.dump(2) << '\n';
  } else {
    auto f = open_output(out_path);
    f << out.dump(2) << '\n';
  }
  return 0;
}

urndis::Urn urn_from_json(const json& j, const std::string& which) {
  if (!j.is_object() || j.empty())
    throw urndis::ParseError("urn spec '" + which + "' must be a non-empty object", 0);
  std::vector<std::pair<urndis::ColorId, double>> probs;
  for (const auto& [key, value] : j.items()) {
    std::uint64_t color = 0;
    try {
      std::size_t pos = 0;
      color = std::stoull(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw urndis::ParseError("urn color id '" + key + "' is not a nonnegative integer", 0);
    }
    if (!value.is_number())
      throw urndis::ParseError("urn probability for color " + key + " is not a number", 0);
    probs.emplace_back(color, value.get<double>());
  }
  return urndis::Urn::normalized(std::move(probs), 1e-9);
}

int run_simulate(const std::string& urns_path, std::uint64_t n_x, std::uint64_t n_y,
                 std::vector<std::uint64_t> k_set, std::uint64_t replicates,
                 std::uint64_t seed, unsigned threads, const std::string& out_path) {
  std::ifstream in(urns_path);
  if (!in) throw urndis::ParseError("cannot open '" + urns_path + "'", 0);
  json spec;
  try {
    in >> spec;
  } catch (const json::parse_error& e) {
    throw urndis::ParseError(std::string("urn spec is not valid JSON: ") + e.what(), 0);
  }
  if (!spec.contains("px") || !spec.contains("py"))
    throw urndis::ParseError("urn spec needs 'px' and 'py' objects", 0);
  const urndis::UrnPair urns{urn_from_json(spec["px"], "px"),
                             urn_from_json(spec["py"], "py")};

  urndis::MonteCarloConfig cfg;
  cfg.n_x = n_x;
  cfg.n_y = n_y;
  cfg.k_set = std::move(k_set);
  cfg.replicates = replicates;
  cfg.seed = seed;
  cfg.threads = threads;
  const auto reports = urndis::monte_carlo(urns, cfg);

  json out;
  out["version"] = urndis::kVersion;
  out["seed"] = seed;
  out["n_x"] = n_x;
  out["n_y"] = n_y;
  out["replicates"] = replicates;
  json list = json::array();
  for (const auto& r : reports) {
    list.push_back({{"k", r.k},
                    {"mean_theta_hat", r.mean_theta_hat},
                    {"empirical_variance", r.empirical_variance},
                    {"mean_jackknife", r.mean_jackknife},
                    {"exact_theta", r.exact_theta},
                    {"exact_variance", r.exact_variance},
                    {"projection_variance", r.projection_variance},
                    {"ks_statistic", r.ks_statistic},
                    {"degenerate", r.degenerate}});
  }
  out["reports"] = std::move(list);
  if (out_path.empty()) {
    std::cout << out.dump(2) << '\n';
  } else {
    auto f = open_output(out_path);
    f << out.dump(2) << '\n';
  }
  return 0;
}

int run_validate(std::uint64_t seed, std::size_t pairs) {
  const auto results = urndis::run_selfchecks(seed, pairs);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  std::cout << (all ? "validate: all checks passed\n" : "validate: FAILURES\n");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissimilarity of paired discrete samples: minimum-variance "
               "unbiased estimates, jackknife errors and convergence heuristics"};
  app.set_version_flag("--version", urndis::kVersion);
  app.require_subcommand(1);

  unsigned threads = env_threads();

  // pairwise
  auto* pw = app.add_subcommand("pairwise",
                                "All ordered sample pairs of a count table -> "
                                "theta/stderr/dderiv CSV matrices");
  std::string pw_table, pw_prefix = "pairwise", pw_json;
  std::uint64_t pw_min_depth = 5000;
  pw->add_option("table", pw_table, "tab-delimited count table ('-' for stdin)")
      ->required();
  pw->add_option("-o,--output", pw_prefix, "output prefix for the CSV matrices");
  pw->add_option("--min-depth", pw_min_depth, "keep samples with total count >= this")
      ->capture_default_str();
  pw->add_option("--threads", threads, "worker threads (0 = hardware)");
  pw->add_option("--json", pw_json, "also write a JSON envelope with metadata");

  // curve
  auto* cv = app.add_subcommand("curve", "Per-k estimates for one ordered pair -> CSV");
  std::string cv_table, cv_x, cv_y, cv_out;
  cv->add_option("table", cv_table, "tab-delimited count table ('-' for stdin)")
      ->required();
  cv->add_option("x_sample", cv_x, "sample id used as urn-x")->required();
  cv->add_option("y_sample", cv_y, "sample id used as urn-y")->required();
  cv->add_option("-o,--output", cv_out, "output file (default stdout)");

  // heuristics
  auto* he = app.add_subcommand("heuristics",
                                "Convergence diagnostics for one ordered pair -> JSON");
  std::string he_table, he_x, he_y, he_out;
  std::uint64_t he_klo = 0, he_khi = 0;
  he->add_option("table", he_table, "tab-delimited count table ('-' for stdin)")
      ->required();
  he->add_option("x_sample", he_x, "sample id used as urn-x")->required();
  he->add_option("y_sample", he_y, "sample id used as urn-y")->required();
  he->add_option("--k-lo", he_klo, "regression window start (default 0.6 * n_y)");
  he->add_option("--k-hi", he_khi, "regression window end (default n_y)");
  he->add_option("-o,--output", he_out, "output file (default stdout)");

  // simulate
  auto* si = app.add_subcommand("simulate",
                                "Seeded Monte Carlo reports for a known urn pair -> JSON");
  std::string si_urns, si_out;
  std::uint64_t si_nx = 0, si_ny = 0, si_replicates = 1000, si_seed = 1;
  std::vector<std::uint64_t> si_k;
  si->add_option("urns", si_urns, "JSON file with 'px' and 'py' color->probability maps")
      ->required();
  si->add_option("--nx", si_nx, "draws from urn-x per replicate")->required();
  si->add_option("--ny", si_ny, "draws from urn-y per replicate")->required();
  si->add_option("-k,--k", si_k, "k values to report (repeatable)")->required();
  si->add_option("--replicates", si_replicates, "number of replicates (>= 100)")
      ->capture_default_str();
  si->add_option("--seed", si_seed, "RNG seed")->capture_default_str();
  si->add_option("--threads", threads, "worker threads (0 = hardware)");
  si->add_option("-o,--output", si_out, "output file (default stdout)");

  // validate
  auto* va = app.add_subcommand("validate", "Run the built-in oracle-equivalence suite");
  std::uint64_t va_seed = 1;
  std::size_t va_pairs = 200;
  va->add_option("--seed", va_seed, "RNG seed")->capture_default_str();
  va->add_option("--pairs", va_pairs, "random pairs per check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (pw->parsed())
      return run_pairwise(pw_table, pw_prefix, pw_min_depth, threads, pw_json);
    if (cv->parsed()) return run_curve(cv_table, cv_x, cv_y, cv_out);
    if (he->parsed()) return run_heuristics(he_table, he_x, he_y, he_klo, he_khi, he_out);
    if (si->parsed())
      return run_simulate(si_urns, si_nx, si_ny, si_k, si_replicates, si_seed, threads,
                          si_out);
    if (va->parsed()) return run_validate(va_seed, va_pairs);
  } catch (const urndis::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
