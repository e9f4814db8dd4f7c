// gintail: batch CLI for the real-Ginibre largest-real-eigenvalue tail
// toolkit. Subcommands write CSV/JSON data files plus a run manifest that
// records the exact argv; re-running that argv reproduces every numeric
// output byte for byte (counter-based RNG, indexed reductions).
//
// Exit codes: 0 ok, 2 validation failure, 3 convergence failure, 64 usage.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gintail/abm_lab.hpp"
#include "gintail/constants.hpp"
#include "gintail/errors.hpp"
#include "gintail/ginibre_lab.hpp"
#include "gintail/manifest.hpp"
#include "gintail/predictor.hpp"
#include "gintail/special_fn.hpp"
#include "gintail/stats.hpp"
#include "gintail/version.hpp"
#include "gintail/walk_lab.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitUsage = 64;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct OutputSink {
  std::string out_dir = ".";
  gintail::RunManifest manifest;

  std::string path_for(const std::string& name) const {
    return (std::filesystem::path(out_dir) / name).string();
  }

  std::ofstream open(const std::string& name) {
    std::filesystem::create_directories(out_dir);
    const std::string p = path_for(name);
    std::ofstream f(p);
    if (!f) throw gintail::ValidationError("cannot open output file " + p);
    manifest.outputs.push_back(p);
    return f;
  }

  void write_json(const std::string& name, const json& j) {
    auto f = open(name);
    f << j.dump(2) << "\n";
  }

  void finish(const std::string& command,
              const std::map<std::string, std::string>& params, std::uint64_t seed,
              unsigned workers, const std::vector<std::string>& argv) {
    manifest.command = command;
    manifest.parameters = params;
    manifest.seed = seed;
    manifest.worker_count = workers;
    manifest.versions = {{"gintail", gintail::kVersion},
                         {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                               std::to_string(NLOHMANN_JSON_VERSION_MINOR)}};
    manifest.finished = gintail::iso8601_utc_now();
    manifest.argv = argv;
    std::filesystem::create_directories(out_dir);
    gintail::save_manifest(manifest, path_for(command + ".manifest.json"));
  }
};

// Flat key=value configuration file; '#' starts a comment. Flags beat
// GTAIL_* environment variables, which beat config entries.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  if (path.empty()) return kv;
  std::ifstream in(path);
  if (!in) throw gintail::ValidationError("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (!key.empty()) kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

void assign_from_text(const std::string& text, std::string& dest) { dest = text; }

template <typename T>
void assign_from_text(const std::string& text, T& dest) {
  std::stringstream ss(text);
  ss >> dest;
  if (ss.fail()) throw gintail::ValidationError("bad configured value: " + text);
}

template <typename T>
void apply_fallback(const CLI::Option* opt, const char* env_name, const std::string& key,
                    const std::map<std::string, std::string>& cfg, T& dest) {
  if (opt != nullptr && opt->count() > 0) return;  // explicit flag wins
  const char* env = std::getenv(env_name);
  if (env != nullptr && *env != '\0') {
    assign_from_text(env, dest);
    return;
  }
  if (auto it = cfg.find(key); it != cfg.end()) assign_from_text(it->second, dest);
}

std::vector<double> parse_grid(const std::string& spec) {
  // "0.5:2.0:0.25" (lo:hi:step) or comma list "0.5,1,1.5"
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0)
      throw gintail::ValidationError("bad grid spec: " + spec);
    for (double v = lo; v <= hi + 1e-12; v += step) grid.push_back(v);
  } else {
    std::string token;
    std::stringstream ss(spec);
    while (std::getline(ss, token, ',')) grid.push_back(std::stod(token));
  }
  if (grid.empty()) throw gintail::ValidationError("empty grid: " + spec);
  return grid;
}

void write_tail_csv(std::ofstream& f, const gintail::TailCurve& c,
                    const std::string& extra_header = "",
                    const std::string& extra_values = "") {
  f << "L,empirical_log_prob,stderr,n_samples,event_count" << extra_header << "\n";
  for (std::size_t i = 0; i < c.L_grid.size(); ++i) {
    f << format_double(c.L_grid[i]) << ",";
    if (std::isfinite(c.log_prob[i]))
      f << format_double(c.log_prob[i]) << "," << format_double(c.std_error[i]);
    else
      f << "nan,nan";
    f << "," << c.n_samples << "," << c.event_counts[i] << extra_values << "\n";
  }
}

json estimate_row(const std::string& name, const gintail::McEstimate& e,
                  double truncated_fraction = 0.0) {
  return json{{"name", name},
              {"estimate", e.mean},
              {"stderr", e.std_error},
              {"n", e.n_samples},
              {"seed", e.seed},
              {"truncated_fraction", truncated_fraction}};
}

// --- subcommand bodies -------------------------------------------------------

int run_constants(const OutputSink& sink_in, std::int64_t cutoff, unsigned workers,
                  const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  const auto terms = gintail::series_terms(cutoff, workers);
  const auto ce = gintail::c_edge(std::span<const double>(terms), gintail::TailMode::tail_corrected);
  const auto cb = gintail::c_bulk(std::span<const double>(terms), gintail::TailMode::tail_corrected);
  const auto ce_raw = gintail::c_edge(std::span<const double>(terms), gintail::TailMode::raw);
  json j{{"C_e", ce.value},
         {"C_b", cb.value},
         {"C_e_raw", ce_raw.value},
         {"kappa", gintail::kappa()},
         {"exp_C_e", std::exp(ce.value)},
         {"exp_C_b", std::exp(cb.value)},
         {"bulk_edge_gap", cb.value - ce.value},
         {"cutoff", cutoff},
         {"tail_estimate", ce.tail_estimate}};
  sink.write_json("constants.json", j);
  std::cout << j.dump(2) << "\n";
  sink.finish("constants", {{"cutoff", std::to_string(cutoff)}}, 0, workers, argv);
  return kExitOk;
}

int run_predict(const OutputSink& sink_in, double L, std::int64_t cutoff,
                unsigned workers, const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  const auto tc = gintail::compute_tail_constants(cutoff, workers);
  const auto b = gintail::predict(L, tc);
  json j{{"L", b.L},
         {"leading", b.leading},
         {"constant", b.constant},
         {"predicted_log_prob", b.predicted_log_prob},
         {"predicted_prob", b.predicted_prob},
         {"error_order", b.error_order},
         {"kappa", tc.kappa},
         {"cutoff", cutoff}};
  sink.write_json("predict.json", j);
  std::cout << j.dump(2) << "\n";
  sink.finish("predict", {{"L", format_double(L)}, {"cutoff", std::to_string(cutoff)}}, 0,
              workers, argv);
  return kExitOk;
}

int run_verify_identities(const OutputSink& sink_in, unsigned workers,
                          const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  bool ok = true;
  auto f = sink.open("identities.csv");
  f << "check,value,threshold,pass\n";
  auto row = [&](const std::string& name, double value, double threshold) {
    const bool pass = std::fabs(value) < threshold;
    ok = ok && pass;
    f << name << "," << format_double(value) << "," << format_double(threshold) << ","
      << (pass ? "1" : "0") << "\n";
    std::cout << (pass ? "[ok]   " : "[FAIL] ") << name << " = " << value << "\n";
  };

  for (double t = 0.05; t <= 50.0; t *= 1.35)
    row("modular_t_" + format_double(t), gintail::check_modular(t), 1e-12);
  row("r_of_l_identity", gintail::r_of_l_identity_check(1e-9), 1e-6);

  const auto terms = gintail::series_terms(50000, workers);
  const auto ce = gintail::c_edge(std::span<const double>(terms), gintail::TailMode::tail_corrected);
  const auto cb = gintail::c_bulk(std::span<const double>(terms), gintail::TailMode::tail_corrected);
  row("bulk_edge_half_log2", cb.value - ce.value - 0.5 * std::log(2.0), 1e-14);

  const double gamma_theta = gintail::euler_mascheroni_theta({1e-10, 200000}).value;
  double harmonic = 0.0;
  for (int n = 1000000; n >= 1; --n) harmonic += 1.0 / n;
  harmonic -= std::log(1e6);
  row("euler_mascheroni_theta_vs_harmonic", gamma_theta - harmonic, 1e-5);

  sink.finish("verify-identities", {}, 0, workers, argv);
  return ok ? kExitOk : kExitValidation;
}

int run_verify_lemmas(const OutputSink& sink_in, std::uint64_t samples, std::uint64_t seed,
                      unsigned workers, const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  bool ok = true;
  auto f = sink.open("lemmas.csv");
  f << "check,lhs,rhs,tolerance,pass\n";
  auto row = [&](const std::string& name, double lhs, double rhs, double tol) {
    const bool pass = std::fabs(lhs - rhs) <= tol;
    ok = ok && pass;
    f << name << "," << format_double(lhs) << "," << format_double(rhs) << ","
      << format_double(tol) << "," << (pass ? "1" : "0") << "\n";
    std::cout << (pass ? "[ok]   " : "[FAIL] ") << name << ": " << lhs << " vs " << rhs
              << " (tol " << tol << ")\n";
  };

  gintail::WalkConfig cfg;
  cfg.batch = samples;
  cfg.seed = seed;
  cfg.workers = workers;

  // Kac identity
  for (std::int64_t n : {2, 3, 5, 8}) {
    const auto lhs = gintail::kac_lhs(n, cfg);
    row("kac_n" + std::to_string(n), lhs.mean, gintail::kac_rhs(n), 3.0 * lhs.std_error);
  }
  // Dyson telescoping
  for (std::int64_t n : {2, 4, 6}) {
    const auto lhs = gintail::kac_lhs(n, cfg);
    gintail::WalkConfig alt = cfg;
    alt.seed = seed + 1;
    const auto rhs = gintail::dyson_rhs(n, alt);
    row("dyson_n" + std::to_string(n), lhs.mean, rhs.mean,
        3.0 * std::sqrt(lhs.std_error * lhs.std_error + rhs.std_error * rhs.std_error));
  }
  // Cyclic shift identity
  for (std::int64_t n : {1, 2, 3}) {
    for (double L : {0.5, 1.0, 2.0}) {
      const auto c = gintail::cyclic_check(n, L, cfg);
      row("cyclic_n" + std::to_string(n) + "_L" + format_double(L), c.direct.mean,
          c.shifted.mean,
          3.0 * std::sqrt(c.direct.std_error * c.direct.std_error +
                          c.shifted.std_error * c.shifted.std_error));
    }
  }
  // Exactly-one-shift invariant
  gintail::WalkConfig small = cfg;
  small.batch = std::min<std::uint64_t>(samples, 10000);
  for (std::int64_t n : {2, 3, 5})
    row("one_shift_n" + std::to_string(n),
        static_cast<double>(gintail::count_cyclic_shift_violations(n, small)), 0.0, 0.5);
  // Trivariate law vs path MC
  const double exact = gintail::trivariate_density(-1.0, 1.0, 1.0);
  const auto mc = gintail::trivariate_mc(-1.0, 1.0, 1.0, 2048, cfg);
  row("trivariate_(-1,1,1)", mc.mean, exact, 3.0 * mc.std_error);

  sink.finish("verify-lemmas",
              {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}}, seed,
              workers, argv);
  return ok ? kExitOk : kExitValidation;
}

int run_mc_walk(const OutputSink& sink_in, double L, std::uint64_t samples,
                std::uint64_t seed, unsigned workers,
                const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  gintail::WalkConfig cfg;
  cfg.batch = samples;
  cfg.seed = seed;
  cfg.workers = workers;

  auto f = sink.open("walk_estimates.jsonl");
  const auto exit = gintail::exit_probability_mc(cfg, L);
  f << estimate_row("exit_probability_L" + format_double(L), exit.probability,
                    exit.truncated_fraction)
           .dump()
    << "\n";

  const auto walks = gintail::sample_walks(cfg, L);
  std::uint64_t tau0_2 = 0;
  for (const auto& r : walks.records)
    if (!r.truncated && r.tau_0 == 2) ++tau0_2;
  gintail::McEstimate p2;
  p2.mean = static_cast<double>(tau0_2) / static_cast<double>(samples);
  p2.std_error = std::sqrt(p2.mean * (1.0 - p2.mean) / static_cast<double>(samples));
  p2.n_samples = samples;
  p2.seed = seed;
  f << estimate_row("prob_tau0_eq_2", p2, walks.truncated_fraction).dump() << "\n";

  std::cout << "P(tau_L < tau_0) at L=" << L << ": " << exit.probability.mean << " +- "
            << exit.probability.std_error << " (sqrt2*L*P = "
            << std::sqrt(2.0) * L * exit.probability.mean << ")\n";

  sink.finish("mc-walk",
              {{"L", format_double(L)},
               {"samples", std::to_string(samples)},
               {"seed", std::to_string(seed)}},
              seed, workers, argv);
  return kExitOk;
}

int run_transfer_exit(const OutputSink& sink_in, const std::vector<double>& Ls,
                      std::int64_t cells, std::uint64_t max_steps, double residual_tol,
                      const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  auto f = sink.open("transfer_exit.csv");
  f << "L,exit_prob,sqrt2_L_exit,death_prob,residual_mass,steps,spacing\n";
  gintail::TransferParams params;
  params.cells_per_L = cells;
  params.max_steps = max_steps;
  params.residual_tol = residual_tol;
  for (double L : Ls) {
    const auto r = gintail::transfer_exit(L, params);
    f << format_double(L) << "," << format_double(r.exit_prob) << ","
      << format_double(std::sqrt(2.0) * L * r.exit_prob) << ","
      << format_double(r.death_prob) << "," << format_double(r.residual_mass) << ","
      << r.steps << "," << format_double(r.spacing) << "\n";
    std::cout << "L=" << L << ": P=" << r.exit_prob
              << " sqrt2*L*P=" << std::sqrt(2.0) * L * r.exit_prob << "\n";
  }
  sink.finish("transfer-exit", {{"cells", std::to_string(cells)}}, 0, 1, argv);
  return kExitOk;
}

int run_mc_ginibre(const OutputSink& sink_in, int N, std::uint64_t count,
                   std::uint64_t seed, unsigned workers, const std::string& grid_spec,
                   bool hessenberg, const std::string& samples_out,
                   const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  gintail::GinibreConfig cfg;
  cfg.n = N;
  cfg.count = count;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.method =
      hessenberg ? gintail::GinibreMethod::hessenberg_direct : gintail::GinibreMethod::dense_schur;
  const auto samples = gintail::sample_ginibre(cfg);
  const auto grid = parse_grid(grid_spec);
  const auto curve = gintail::ginibre_tail_curve(samples, grid);

  auto f = sink.open("ginibre_tail.csv");
  write_tail_csv(f, curve, ",N", "," + std::to_string(N));

  if (!samples_out.empty()) {
    auto s = sink.open(samples_out);
    s << "lambda_max_shifted,n_real\n";
    for (const auto& e : samples)
      if (e.valid && e.n_real > 0)
        s << format_double(e.lambda_max_shifted) << "," << e.n_real << "\n";
  }
  std::uint64_t none = 0, bad = 0;
  gintail::lambda_max_values(samples, &none, &bad);
  std::cout << "ginibre N=" << N << " count=" << count << " no_real=" << none
            << " failed=" << bad << "\n";

  sink.finish("mc-ginibre",
              {{"n", std::to_string(N)},
               {"count", std::to_string(count)},
               {"seed", std::to_string(seed)},
               {"l_grid", grid_spec},
               {"method", hessenberg ? "hessenberg" : "dense"}},
              seed, workers, argv);
  return kExitOk;
}

int run_mc_abm(const OutputSink& sink_in, const gintail::AbmConfig& cfg,
               const std::string& grid_spec, const std::string& samples_out,
               const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  for (const auto& w : gintail::abm_config_warnings(cfg))
    std::cerr << "warning: " << w << "\n";
  const auto results = gintail::simulate_abm(cfg);
  const auto grid = parse_grid(grid_spec);
  const auto curve = gintail::rescaled_tail(results, grid);

  auto f = sink.open("abm_tail.csv");
  write_tail_csv(f, curve, ",dt,spacing",
                 "," + format_double(cfg.dt) + "," + format_double(cfg.init_spacing));

  if (!samples_out.empty()) {
    auto s = sink.open(samples_out);
    s << "rightmost_rescaled,n_survivors,annihilations\n";
    for (const auto& r : results)
      if (!r.empty)
        s << format_double(r.rightmost_rescaled) << "," << r.n_survivors << ","
          << r.annihilations << "\n";
  }
  std::uint64_t empties = 0;
  gintail::rightmost_values(results, &empties);
  std::cout << "abm replicas=" << cfg.replicas << " empty=" << empties << "\n";

  sink.finish("mc-abm",
              {{"left_extent", format_double(cfg.left_extent)},
               {"spacing", format_double(cfg.init_spacing)},
               {"dt", format_double(cfg.dt)},
               {"t_final", format_double(cfg.t_final)},
               {"count", std::to_string(cfg.replicas)},
               {"seed", std::to_string(cfg.seed)},
               {"l_grid", grid_spec}},
              cfg.seed, cfg.workers, argv);
  return kExitOk;
}

struct CsvCurve {
  std::vector<double> L;
  std::vector<std::string> log_prob, std_error;
};

CsvCurve read_tail_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gintail::ValidationError("cannot read " + path);
  CsvCurve c;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() < 3) continue;
    c.L.push_back(std::stod(cells[0]));
    c.log_prob.push_back(cells[1]);
    c.std_error.push_back(cells[2]);
  }
  return c;
}

int run_compare(const OutputSink& sink_in, const std::string& ginibre_csv,
                const std::string& abm_csv, std::int64_t cutoff, unsigned workers,
                const std::vector<std::string>& argv) {
  OutputSink sink = sink_in;
  const auto tc = gintail::compute_tail_constants(cutoff, workers);
  const CsvCurve gin = ginibre_csv.empty() ? CsvCurve{} : read_tail_csv(ginibre_csv);
  const CsvCurve abm = abm_csv.empty() ? CsvCurve{} : read_tail_csv(abm_csv);

  std::vector<double> grid = gin.L;
  for (double L : abm.L)
    if (std::find(grid.begin(), grid.end(), L) == grid.end()) grid.push_back(L);
  std::sort(grid.begin(), grid.end());
  if (grid.empty()) throw gintail::ValidationError("compare: no input curves");

  auto find_in = [](const CsvCurve& c, double L, int which) -> std::string {
    for (std::size_t i = 0; i < c.L.size(); ++i)
      if (std::fabs(c.L[i] - L) < 1e-9) return which == 0 ? c.log_prob[i] : c.std_error[i];
    return "nan";
  };

  auto f = sink.open("compare.csv");
  f << "L,predicted_log_prob,ginibre_log_prob,ginibre_stderr,abm_log_prob,abm_stderr\n";
  for (double L : grid) {
    const auto p = gintail::predict(L, tc);
    f << format_double(L) << "," << format_double(p.predicted_log_prob) << ","
      << find_in(gin, L, 0) << "," << find_in(gin, L, 1) << "," << find_in(abm, L, 0) << ","
      << find_in(abm, L, 1) << "\n";
  }
  sink.finish("compare",
              {{"ginibre", ginibre_csv}, {"abm", abm_csv}, {"cutoff", std::to_string(cutoff)}},
              0, workers, argv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tail asymptotics of the largest real eigenvalue of the real Ginibre "
               "ensemble: exact constants, deterministic solvers, and Monte Carlo "
               "cross-checks"};
  argv = app.ensure_utf8(argv);
  const std::vector<std::string> argv_copy(argv, argv + argc);

  std::string config_path;
  std::string out_dir = ".";
  unsigned workers = 0;
  app.add_option("--config", config_path, "key=value config file");
  auto* out_dir_opt = app.add_option("--out-dir", out_dir, "directory for outputs and manifests");
  auto* workers_opt = app.add_option("--workers", workers, "worker thread cap (0 = hardware)");
  app.require_subcommand(1);

  // constants
  auto* c_cmd = app.add_subcommand("constants", "edge/bulk constants and kappa");
  std::int64_t cutoff = 400000;
  auto* cutoff_opt = c_cmd->add_option("--cutoff", cutoff, "series cutoff");

  // predict
  auto* p_cmd = app.add_subcommand("predict", "tail prediction -kappa L + C_e");
  double predict_L = 1.0;
  std::int64_t predict_cutoff = 200000;
  p_cmd->add_option("--L", predict_L, "gap size L")->required();
  p_cmd->add_option("--cutoff", predict_cutoff, "series cutoff for C_e");

  // verify-identities
  auto* vi_cmd = app.add_subcommand("verify-identities",
                                    "deterministic residual table (modular, assembly chain)");

  // verify-lemmas
  auto* vl_cmd = app.add_subcommand("verify-lemmas", "Monte Carlo lemma checks");
  std::uint64_t vl_samples = 200000;
  std::uint64_t vl_seed = 1;
  vl_cmd->add_option("--samples", vl_samples, "samples per estimate");
  auto* vl_seed_opt = vl_cmd->add_option("--seed", vl_seed, "base seed");

  // mc-walk
  auto* w_cmd = app.add_subcommand("mc-walk", "stopped-walk sampling and exit probability");
  double walk_L = 5.0;
  std::uint64_t walk_samples = 200000, walk_seed = 1;
  w_cmd->add_option("--l", walk_L, "barrier L")->required();
  w_cmd->add_option("--samples", walk_samples, "number of walks");
  auto* walk_seed_opt = w_cmd->add_option("--seed", walk_seed, "base seed");

  // transfer-exit
  auto* t_cmd = app.add_subcommand("transfer-exit", "deterministic exit probability");
  std::string transfer_grid = "5,10,20";
  std::int64_t transfer_cells = 2000;
  std::uint64_t transfer_max_steps = 200000;
  double transfer_residual_tol = 1e-9;
  t_cmd->add_option("--l-grid", transfer_grid, "comma list or lo:hi:step of L values");
  t_cmd->add_option("--cells", transfer_cells, "grid cells across [0, L]");
  t_cmd->add_option("--max-steps", transfer_max_steps, "step budget before giving up");
  t_cmd->add_option("--residual-tol", transfer_residual_tol, "live-mass stopping tolerance");

  // mc-ginibre
  auto* g_cmd = app.add_subcommand("mc-ginibre", "shifted largest real eigenvalue sampling");
  int gin_n = 256;
  std::uint64_t gin_count = 2000, gin_seed = 1;
  std::string gin_grid = "0:2:0.125";
  bool gin_hessenberg = false;
  std::string gin_samples_out;
  g_cmd->add_option("--n", gin_n, "matrix dimension")->required();
  g_cmd->add_option("--count", gin_count, "number of matrices");
  auto* gin_seed_opt = g_cmd->add_option("--seed", gin_seed, "base seed");
  g_cmd->add_option("--l-grid", gin_grid, "L grid");
  g_cmd->add_flag("--hessenberg", gin_hessenberg,
                  "sample the distribution-exact Hessenberg form (skips the dense reduction)");
  g_cmd->add_option("--samples-out", gin_samples_out, "also write raw samples CSV");

  // mc-abm
  auto* a_cmd = app.add_subcommand("mc-abm", "annihilating Brownian motions, rightmost particle");
  gintail::AbmConfig abm_cfg;
  std::string abm_grid = "0:2:0.125";
  std::string abm_samples_out;
  a_cmd->add_option("--left-extent", abm_cfg.left_extent, "initial lattice extent");
  a_cmd->add_option("--spacing", abm_cfg.init_spacing, "initial lattice spacing");
  a_cmd->add_option("--dt", abm_cfg.dt, "time step");
  a_cmd->add_option("--t-final", abm_cfg.t_final, "final time");
  a_cmd->add_option("--count", abm_cfg.replicas, "number of replicas");
  auto* abm_seed_opt = a_cmd->add_option("--seed", abm_cfg.seed, "base seed");
  a_cmd->add_option("--l-grid", abm_grid, "L grid");
  a_cmd->add_option("--samples-out", abm_samples_out, "also write raw samples CSV");

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "overlay predictor with empirical curves");
  std::string cmp_gin, cmp_abm;
  std::int64_t cmp_cutoff = 200000;
  cmp_cmd->add_option("--ginibre", cmp_gin, "ginibre tail CSV");
  cmp_cmd->add_option("--abm", cmp_abm, "abm tail CSV");
  cmp_cmd->add_option("--cutoff", cmp_cutoff, "series cutoff for C_e");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto cfg_file = load_config(config_path);
    apply_fallback(out_dir_opt, "GTAIL_OUT_DIR", "out_dir", cfg_file, out_dir);
    apply_fallback(workers_opt, "GTAIL_WORKERS", "workers", cfg_file, workers);
    apply_fallback(cutoff_opt, "GTAIL_CUTOFF", "cutoff", cfg_file, cutoff);
    apply_fallback(vl_seed_opt, "GTAIL_SEED", "seed", cfg_file, vl_seed);
    apply_fallback(walk_seed_opt, "GTAIL_SEED", "seed", cfg_file, walk_seed);
    apply_fallback(gin_seed_opt, "GTAIL_SEED", "seed", cfg_file, gin_seed);
    apply_fallback(abm_seed_opt, "GTAIL_SEED", "seed", cfg_file, abm_cfg.seed);
  } catch (const gintail::ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  }

  OutputSink sink;
  sink.out_dir = out_dir;
  sink.manifest.started = gintail::iso8601_utc_now();

  try {
    if (*c_cmd) return run_constants(sink, cutoff, workers, argv_copy);
    if (*p_cmd) return run_predict(sink, predict_L, predict_cutoff, workers, argv_copy);
    if (*vi_cmd) return run_verify_identities(sink, workers, argv_copy);
    if (*vl_cmd) return run_verify_lemmas(sink, vl_samples, vl_seed, workers, argv_copy);
    if (*w_cmd) return run_mc_walk(sink, walk_L, walk_samples, walk_seed, workers, argv_copy);
    if (*t_cmd)
      return run_transfer_exit(sink, parse_grid(transfer_grid), transfer_cells,
                               transfer_max_steps, transfer_residual_tol, argv_copy);
    if (*g_cmd)
      return run_mc_ginibre(sink, gin_n, gin_count, gin_seed, workers, gin_grid,
                            gin_hessenberg, gin_samples_out, argv_copy);
    if (*a_cmd) {
      abm_cfg.workers = workers;
      return run_mc_abm(sink, abm_cfg, abm_grid, abm_samples_out, argv_copy);
    }
    if (*cmp_cmd) return run_compare(sink, cmp_gin, cmp_abm, cmp_cutoff, workers, argv_copy);
  } catch (const gintail::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const gintail::ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
