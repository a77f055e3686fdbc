// glasner-lab: density certification, dilation search, and batch
// experiments for linear semigroup actions on the torus.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "glasner/experiments.hpp"
#include "glasner/expsum.hpp"
#include "glasner/intlinalg.hpp"
#include "glasner/io.hpp"

namespace fs = std::filesystem;
using namespace glasner;

namespace {

constexpr int kExitError = 3;

std::string config_hash(const json& config) {
  std::ostringstream ss;
  ss << std::hex << std::hash<std::string>{}(config.dump());
  return ss.str();
}

// Every report carries enough to rerun it: seed, budgets, version, config hash.
json report_envelope(const std::string& experiment, const json& config) {
  return {{"schema", 1},
          {"artifact_version", kArtifactVersion},
          {"experiment", experiment},
          {"config", config},
          {"config_hash", config_hash(config)}};
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json_file(out_path, j);
}

void write_csv(const fs::path& path, const std::string& header,
               const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << header << "\n";
  for (const auto& l : lines) out << l << "\n";
}

std::vector<long> parse_freq(const std::string& s) {
  std::vector<long> a;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) a.push_back(std::stol(tok));
  return a;
}

int run_experiment(const std::string& name, double eps, int trials, long long n_max, int k,
                   uint64_t seed, const std::string& out_dir) {
  fs::create_directories(out_dir);
  json config = {{"name", name}, {"eps", eps},     {"trials", trials},
                 {"n_max", n_max}, {"k", k},       {"seed", seed}};
  json report = report_envelope(name, config);
  std::vector<std::string> csv;

  if (name == "bmv-fuzz") {
    auto r = run_pair_bound_fuzz(trials, seed);
    report["summary"] = {{"trials", r.trials}, {"violations", r.violations}, {"min_margin", r.min_margin}};
    write_csv(fs::path(out_dir) / "bmv_fuzz.csv", "trials,violations,min_margin",
              {std::to_string(r.trials) + "," + std::to_string(r.violations) + "," + std::to_string(r.min_margin)});
  } else if (name == "glasner1d") {
    auto r = run_glasner1d(eps, k, trials, n_max, seed);
    report["summary"] = {{"success_rate", r.success_rate}};
    for (const auto& row : r.rows)
      csv.push_back(std::to_string(row.trial_seed) + "," + (row.success ? "1" : "0") + "," +
                    std::to_string(row.scanned) + "," + row.dilator);
    write_csv(fs::path(out_dir) / "glasner1d.csv", "trial_seed,success,scanned,dilator", csv);
  } else if (name == "prop16") {
    auto r = run_poly_product(eps, k, trials, n_max, seed);
    report["summary"] = {{"success_rate", r.success_rate}};
    for (const auto& row : r.rows)
      csv.push_back(std::to_string(row.trial_seed) + "," + (row.success ? "1" : "0") + "," +
                    std::to_string(row.scanned) + "," + row.dilator);
    write_csv(fs::path(out_dir) / "prop16.csv", "trial_seed,success,scanned,dilator", csv);
  } else if (name == "thmC") {
    auto r = run_group_pipeline(eps, k, trials, /*ball_radius=*/8, /*element_budget=*/100'000, seed);
    report["summary"] = {{"success_rate", r.search.success_rate},
                         {"poly_consistent", r.poly_consistent},
                         {"poly_degree", r.poly_degree},
                         {"substitution_base", r.R}};
    for (const auto& row : r.search.rows)
      csv.push_back(std::to_string(row.trial_seed) + "," + (row.success ? "1" : "0") + "," +
                    std::to_string(row.scanned) + "," + row.dilator);
    write_csv(fs::path(out_dir) / "thmC.csv", "trial_seed,success,scanned,dilator", csv);
  } else if (name == "walk-decay") {
    auto r = run_walk_decay({1, 2, 3, 5, 7, 11, 101}, /*n_max=*/80, seed);
    report["summary"] = {{"monotone", r.monotone}, {"slack", r.slack}};
    for (const auto& row : r.rows) csv.push_back(std::to_string(row.q) + "," + std::to_string(row.plateau));
    write_csv(fs::path(out_dir) / "walk_decay.csv", "q,plateau", csv);
  } else if (name == "hq-scaling") {
    auto r = run_hq_scaling({32, 64, 128, 256}, /*r=*/1.0, seed);
    report["summary"] = {{"ok", r.ok}};
    json slopes = json::array();
    for (const auto& s : r.slopes)
      slopes.push_back({{"family", s.family}, {"d", s.d}, {"slope", s.slope}, {"bound", s.bound}});
    report["summary"]["slopes"] = slopes;
    for (const auto& row : r.rows)
      csv.push_back(row.family + "," + std::to_string(row.d) + "," + std::to_string(row.k) + "," +
                    std::to_string(row.sum));
    write_csv(fs::path(out_dir) / "hq_scaling.csv", "family,d,k,sum", csv);
  } else {
    std::cerr << "unknown experiment: " << name << "\n";
    return kExitError;
  }

  save_json_file((fs::path(out_dir) / (name + "_summary.json")).string(), report);
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glasner-lab: epsilon-density search and certification on the torus"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "cap internal worker threads (env GLASNER_LAB_THREADS)");

  std::string input, out, gens_path, poly_path, measure_path, freq = "1";
  double eps = 0.1;
  long long budget = 100'000;
  int max_refinements = 10, radius = 8, steps = 40;
  uint64_t seed = 1;

  auto* check = app.add_subcommand("check-density", "certified eps-density verdict for a point set");
  check->add_option("--input", input, "point-set JSON file")->required();
  check->add_option("--eps", eps)->required();
  check->add_option("--max-refinements", max_refinements);
  check->add_option("--out", out);

  auto* dilate = app.add_subcommand("find-dilate", "scan n = 1..n_max for nY eps-dense");
  dilate->add_option("--input", input)->required();
  dilate->add_option("--eps", eps)->required();
  dilate->add_option("--budget", budget, "n_max");
  dilate->add_option("--max-refinements", max_refinements);
  dilate->add_option("--out", out);

  auto* fpoly = app.add_subcommand("find-poly", "scan n for A(n)Y eps-dense");
  fpoly->add_option("--input", input)->required();
  fpoly->add_option("--poly", poly_path, "polynomial matrix JSON")->required();
  fpoly->add_option("--eps", eps)->required();
  fpoly->add_option("--budget", budget, "n_max");
  fpoly->add_option("--max-refinements", max_refinements);
  fpoly->add_option("--out", out);

  auto* fgroup = app.add_subcommand("find-group", "Cayley-ball search for gY eps-dense");
  fgroup->add_option("--input", input)->required();
  fgroup->add_option("--gens", gens_path, "semigroup presentation JSON")->required();
  fgroup->add_option("--eps", eps)->required();
  fgroup->add_option("--budget", budget, "element budget");
  fgroup->add_option("--radius", radius, "ball radius");
  fgroup->add_option("--max-refinements", max_refinements);
  fgroup->add_option("--out", out);

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--input", input, "matrix JSON")->required();
  snf->add_option("--out", out);

  auto* diagnose = app.add_subcommand("diagnose", "torsion histogram CSV for an exact point set");
  diagnose->add_option("--input", input)->required();
  diagnose->add_option("--out", out, "CSV path (stdout when omitted)");

  auto* walk = app.add_subcommand("walk", "Fourier decay profile of a random linear walk");
  walk->add_option("--measure", measure_path, "walk measure JSON")->required();
  walk->add_option("--input", input, "point-set JSON with a single exact start point")->required();
  walk->add_option("--freq", freq, "frequency vector, comma separated");
  walk->add_option("--steps", steps, "maximum step count");
  walk->add_option("--out", out, "CSV path (stdout when omitted)");

  std::string exp_name;
  int trials = 40, kpoints = 400;
  auto* experiment = app.add_subcommand("experiment", "named batch experiment");
  experiment->add_option("--name", exp_name,
                         "glasner1d | prop16 | thmC | walk-decay | bmv-fuzz | hq-scaling")->required();
  experiment->add_option("--eps", eps);
  experiment->add_option("--trials", trials);
  experiment->add_option("--budget", budget, "n_max");
  experiment->add_option("--k", kpoints, "point count");
  experiment->add_option("--seed", seed);
  experiment->add_option("--out", out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_thread_cap(threads);

  try {
    if (check->parsed()) {
      TorusPointSet Y = point_set_from_json(load_json_file(input));
      DensityVerdict v = is_eps_dense(Y, eps, max_refinements);
      emit(to_json(v), out);
      switch (v.status) {
        case Density::Dense: return 0;
        case Density::NotDense: return 1;
        case Density::Undecided: return 2;
      }
    }
    if (dilate->parsed()) {
      TorusPointSet Y = point_set_from_json(load_json_file(input));
      SearchBudget b;
      b.n_max = budget;
      b.max_refinements = max_refinements;
      SearchOutcome o = find_scalar_dilation(Y, eps, b);
      json j = to_json(o);
      j["eps"] = eps;
      emit(j, out);
      return o.found ? 0 : 1;
    }
    if (fpoly->parsed()) {
      TorusPointSet Y = point_set_from_json(load_json_file(input));
      PolyMatrix A = poly_matrix_from_json(load_json_file(poly_path));
      SearchBudget b;
      b.n_max = budget;
      b.max_refinements = max_refinements;
      SearchOutcome o = find_poly_dilation(Y, A, eps, b);
      json j = to_json(o);
      j["eps"] = eps;
      emit(j, out);
      return o.found ? 0 : 1;
    }
    if (fgroup->parsed()) {
      TorusPointSet Y = point_set_from_json(load_json_file(input));
      SemigroupPresentation S = presentation_from_json(load_json_file(gens_path));
      SearchBudget b;
      b.element_budget = budget;
      b.ball_radius = radius;
      b.max_refinements = max_refinements;
      SearchOutcome o = find_group_dilation(Y, S, eps, b);
      json j = to_json(o);
      j["eps"] = eps;
      emit(j, out);
      return o.found ? 0 : 1;
    }
    if (snf->parsed()) {
      IntMat m = int_mat_from_json(load_json_file(input));
      emit(to_json(smith_normal_form(m)), out);
      return 0;
    }
    if (diagnose->parsed()) {
      TorusPointSet Y = point_set_from_json(load_json_file(input));
      TorsionHistogram h = torsion_histogram(Y);
      std::ostringstream ss;
      ss << "q,h_q\n";
      for (const auto& [q, hq] : h.counts) ss << q.get_str() << "," << hq << "\n";
      if (out.empty())
        std::cout << ss.str();
      else {
        std::ofstream f(out);
        f << ss.str();
      }
      return 0;
    }
    if (walk->parsed()) {
      WalkMeasure mu = measure_from_json(load_json_file(measure_path));
      TorusPointSet X = point_set_from_json(load_json_file(input));
      if (X.size() != 1) throw std::invalid_argument("walk: expected exactly one start point");
      auto profile = decay_profile(mu, X.points.front(), parse_freq(freq), steps);
      std::ostringstream ss;
      ss << "n,modulus,se\n";
      for (const auto& row : profile) ss << row.n << "," << row.modulus << "," << row.se << "\n";
      if (out.empty())
        std::cout << ss.str();
      else {
        std::ofstream f(out);
        f << ss.str();
      }
      return 0;
    }
    if (experiment->parsed())
      return run_experiment(exp_name, eps, trials, budget, kpoints, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
