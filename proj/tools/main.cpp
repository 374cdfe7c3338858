// docsat command line: instance generation, solving, benchmark campaigns,
// oracle checks, scaling fits and rate reports.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "docsat/csv.hpp"
#include "docsat/dimacs.hpp"
#include "docsat/experiment.hpp"
#include "docsat/oracle.hpp"

namespace fs = std::filesystem;
using namespace docsat;

namespace {

struct GenerateArgs {
  std::vector<int> n_list;
  double alpha = 4.27;
  int count = 1;
  uint64_t seed = 1;
  std::string out_dir = ".";
  bool forbid_duplicates = false;
  bool planted = false;
  bool planted_balanced = false;
  bool filter_satisfiable = false;
};

int cmd_generate(const GenerateArgs &args) {
  GenConfig flags;
  flags.forbid_duplicate_clauses = args.forbid_duplicates;
  flags.planted = args.planted;
  flags.planted_balanced = args.planted_balanced;
  flags.filter_satisfiable = args.filter_satisfiable;
  const auto suite =
      generate_suite(args.n_list, args.alpha, args.count, args.seed, flags);
  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec)
    throw Error(ErrorCode::io_error, "cannot create " + args.out_dir);
  std::vector<ManifestRow> manifest;
  for (const auto &inst : suite) {
    const fs::path path = fs::path(args.out_dir) / (inst.instance_id + ".cnf");
    write_dimacs_file(inst.formula, path.string());
    manifest.push_back({inst.instance_id, inst.n_vars, args.alpha, inst.seed});
    std::cout << "c wrote " << path.string() << " (" << inst.n_vars
              << " vars, " << inst.formula.num_clauses() << " clauses)\n";
  }
  std::ostringstream buf;
  write_manifest_csv(buf, manifest);
  const fs::path manifest_path = fs::path(args.out_dir) / "manifest.csv";
  write_csv_file(manifest_path.string(), buf.str());
  std::cout << "c wrote " << manifest_path.string() << "\n";
  return 0;
}

struct SolveArgs {
  std::string file;
  HeuristicConfig solver;
  TrialConfig trials;
  int flips_per_var = 300;
  uint64_t seed = 1;
  bool print_model = false;
  bool lenient = false;
};

void print_model(const Assignment &x) {
  std::cout << "v";
  for (size_t k = 0; k < x.size(); ++k)
    std::cout << ' ' << (x[k] ? static_cast<int>(k + 1)
                              : -static_cast<int>(k + 1));
  std::cout << " 0\n";
}

int cmd_solve(const SolveArgs &args) {
  const Formula f = read_dimacs_file(
      args.file, args.lenient ? ParseMode::lenient : ParseMode::strict);
  TrialConfig trials = args.trials;
  trials.max_flips = static_cast<uint64_t>(args.flips_per_var) *
                     static_cast<uint64_t>(f.num_vars());
  std::cout << "c instance " << args.file << " (" << f.num_vars() << " vars, "
            << f.num_clauses() << " clauses)\n";
  std::cout << "c solver " << args.solver.label() << ", trials "
            << trials.n_trials << ", flips per trial " << trials.max_flips
            << ", seed " << args.seed << "\n";
  const RestartResult result = run_restarts(f, args.solver, trials, args.seed);
  const TrialResult *first_solved = nullptr;
  for (const auto &trial : result.trials)
    if (trial.solved) {
      first_solved = &trial;
      break;
    }
  if (first_solved) {
    std::cout << "s SATISFIABLE\n";
    if (args.print_model)
      print_model(first_solved->solution);
  } else {
    std::cout << "s UNKNOWN\n";
  }
  std::cout << "c solved " << result.n_solved << "/" << result.trials_executed
            << " trials, p_hat " << format_double(result.p_hat) << "\n";
  if (first_solved)
    std::cout << "c first solution after " << first_solved->flips_used
              << " flips\n";
  return 0;
}

struct BenchArgs {
  std::string config_path;
  std::string out_dir;
  bool have_seed = false;
  uint64_t seed = 0;
  uint32_t trials = 0;
  int flips_per_var = -1;
  int jobs = -1;
  bool histogram = false;
  bool crit_stats = false;
  bool rates = false;
  int stop_on_solution = -1; // -1 = keep config value
  std::string solver_kind;
  double p_walk = -1;
  double r_doc = -1;
  int tabu_len = -1;
};

int cmd_bench(const BenchArgs &args) {
  ExperimentConfig cfg = load_experiment_config(args.config_path);
  if (!args.out_dir.empty())
    cfg.out_dir = args.out_dir;
  if (args.have_seed)
    cfg.run_seed = args.seed;
  if (args.trials > 0)
    cfg.n_trials = args.trials;
  if (args.flips_per_var >= 0)
    cfg.flips_per_var = args.flips_per_var;
  if (args.jobs >= 0)
    cfg.jobs = args.jobs;
  if (args.histogram)
    cfg.instrumentation.histogram = true;
  if (args.crit_stats)
    cfg.instrumentation.crit_stats = true;
  if (args.rates)
    cfg.instrumentation.rates = true;
  if (args.stop_on_solution >= 0)
    cfg.stop_on_solution = args.stop_on_solution != 0;
  if (!args.solver_kind.empty()) {
    HeuristicConfig solver;
    solver.kind = heuristic_kind_from_name(args.solver_kind);
    if (args.p_walk >= 0)
      solver.p_walk = args.p_walk;
    if (args.r_doc >= 0)
      solver.r_doc = args.r_doc;
    if (args.tabu_len >= 0)
      solver.tabu_len = args.tabu_len;
    cfg.solvers = {solver};
  } else {
    if (args.p_walk >= 0 || args.r_doc >= 0 || args.tabu_len >= 0)
      throw Error(ErrorCode::invalid_config,
                  "solver parameter overrides need --solver");
  }

  const ExperimentResult result = run_experiment(cfg);
  for (const auto &row : result.summary)
    std::cout << "c N=" << row.n_vars << " solver=" << row.solver
              << " R_sol=" << format_double(row.r_sol)
              << " p_avg=" << format_double(row.p_avg) << " +- "
              << format_double(row.p_avg_stderr)
              << " quintile=" << format_double(row.p_avg_quintile) << " +- "
              << format_double(row.p_avg_quintile_stderr) << "\n";
  std::cout << "c output written to " << cfg.out_dir << "\n";
  if (!result.failures.empty()) {
    for (const auto &failure : result.failures)
      std::cerr << "error: " << failure << "\n";
    return 2;
  }
  return 0;
}

struct OracleArgs {
  std::string file;
  std::string mode = "dpll";
  int limit = 25;
  uint64_t budget = 50'000'000;
  bool print_witness = false;
  bool lenient = false;
};

int cmd_oracle(const OracleArgs &args) {
  const Formula f = read_dimacs_file(
      args.file, args.lenient ? ParseMode::lenient : ParseMode::strict);
  std::cout << "c instance " << args.file << " (" << f.num_vars() << " vars, "
            << f.num_clauses() << " clauses)\n";
  if (args.mode == "enumerate") {
    const OracleReport report = enumerate_assignments(f, args.limit);
    std::cout << (report.satisfiable ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
    std::cout << "c min_energy " << report.min_energy << "\n";
    if (f.num_vars() <= 20)
      std::cout << "c solutions " << report.solution_masks.size() << "\n";
    for (const auto &[energy, hist] : report.tlc_by_energy) {
      uint64_t states = 0;
      for (const auto &[tlc, count] : hist)
        states += count;
      std::cout << "c E=" << energy << " states " << states << " mean_tlc "
                << format_double(report.mean_tlc_at(energy)) << "\n";
    }
    return 0;
  }
  if (args.mode != "dpll")
    throw Error(ErrorCode::invalid_config, "mode must be dpll or enumerate");
  const DpllResult result = dpll_sat(f, args.budget);
  switch (result.status) {
  case DpllStatus::satisfiable:
    std::cout << "s SATISFIABLE\n";
    if (args.print_witness)
      print_model(result.witness);
    break;
  case DpllStatus::unsatisfiable:
    std::cout << "s UNSATISFIABLE\n";
    break;
  case DpllStatus::unknown:
    std::cout << "s UNKNOWN\n";
    break;
  }
  std::cout << "c decisions " << result.decisions << "\n";
  return 0;
}

struct FitArgs {
  std::string input;
  std::string solver;
  std::string column = "p_avg";
};

int cmd_fit(const FitArgs &args) {
  const CsvTable table = read_csv_file(args.input);
  const size_t n_col = table.col("n_vars");
  const size_t p_col = table.col(args.column);
  size_t solver_col = static_cast<size_t>(-1);
  bool have_solver_col = true;
  try {
    solver_col = table.col("solver");
  } catch (const Error &) {
    have_solver_col = false;
  }

  std::vector<std::pair<double, double>> points;
  std::string seen_solver;
  size_t dropped = 0;
  for (const auto &row : table.rows) {
    if (have_solver_col) {
      const std::string &solver = row[solver_col];
      if (!args.solver.empty() && solver != args.solver)
        continue;
      if (args.solver.empty()) {
        if (seen_solver.empty())
          seen_solver = solver;
        else if (seen_solver != solver)
          throw Error(ErrorCode::invalid_config,
                      "multiple solvers in input; pick one with --solver");
      }
    }
    const double n = std::stod(row[n_col]);
    const double p = std::stod(row[p_col]);
    if (!(p > 0)) {
      ++dropped; // zero-mean points carry no information for the log fit
      continue;
    }
    points.emplace_back(n, p);
  }
  if (dropped > 0)
    std::cout << "c dropped " << dropped << " rows with " << args.column
              << " <= 0 (kept " << points.size() << ")\n";
  const FitResult fit = fit_scaling(points);
  std::cout << "c points " << fit.n_points << " column " << args.column
            << "\n";
  std::cout << "fit_b " << format_double(fit.fit_b) << "\n";
  std::cout << "prefactor " << format_double(fit.prefactor) << "\n";
  std::cout << "residual " << format_double(fit.residual) << "\n";
  return 0;
}

int cmd_rates(const std::string &input) {
  const CsvTable table = read_csv_file(input);
  const size_t id_col = table.col("instance_id");
  std::vector<std::string> order;
  std::vector<std::vector<RatesRow>> by_instance;
  for (const auto &row : table.rows) {
    RatesRow r;
    r.instance_id = row[id_col];
    r.solver = row[table.col("solver")];
    r.oversat_to_crit = std::stoull(row[table.col("oversat_to_crit")]);
    r.unsat_to_crit = std::stoull(row[table.col("unsat_to_crit")]);
    r.crit_destroyed = std::stoull(row[table.col("crit_destroyed")]);
    r.nonrandom_flips = std::stoull(row[table.col("nonrandom_flips")]);
    r.random_flips = std::stoull(row[table.col("random_flips")]);
    size_t slot = order.size();
    for (size_t i = 0; i < order.size(); ++i)
      if (order[i] == r.instance_id)
        slot = i;
    if (slot == order.size()) {
      order.push_back(r.instance_id);
      by_instance.emplace_back();
    }
    by_instance[slot].push_back(std::move(r));
  }
  int status = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    std::cout << "instance " << order[i] << "\n";
    if (by_instance[i].size() < 2) {
      std::cout << "  (single solver, no comparison)\n";
      const auto &row = by_instance[i][0];
      if (row.nonrandom_flips > 0)
        std::cout << "  " << row.solver << " gamma_c "
                  << format_double(static_cast<double>(row.oversat_to_crit) /
                                   static_cast<double>(row.nonrandom_flips))
                  << "\n";
      continue;
    }
    try {
      const RateReport report = rate_report(by_instance[i]);
      for (const auto &entry : report.entries)
        std::cout << "  " << entry.solver << " gamma_c "
                  << format_double(entry.gamma_c) << " combined "
                  << format_double(entry.combined_rate) << "\n";
      for (const auto &pair : report.ratios)
        std::cout << "  " << pair.numerator << " / " << pair.denominator
                  << ": gamma " << format_double(pair.gamma_ratio)
                  << " combined " << format_double(pair.combined_ratio)
                  << "\n";
    } catch (const Error &e) {
      std::cerr << "error: " << order[i] << ": " << e.what() << "\n";
      status = 2;
    }
  }
  return status;
}

int exit_code_for(const Error &e) {
  return e.code() == ErrorCode::invalid_config ? 1 : 2;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"stochastic local search for 3-SAT with oversatisfied-"
               "constraint dissipation"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App *generate = app.add_subcommand(
      "generate", "generate random 3-SAT instances and a manifest");
  generate->add_option("--n", gen.n_list, "variable counts (repeatable)")
      ->required();
  generate->add_option("--alpha", gen.alpha, "clause density (default 4.27)");
  generate->add_option("--count", gen.count, "instances per size")->required();
  generate->add_option("--seed", gen.seed, "suite master seed");
  generate->add_option("--out-dir", gen.out_dir, "output directory");
  generate->add_flag("--forbid-duplicates", gen.forbid_duplicates,
                     "reject duplicate clauses");
  generate->add_flag("--planted", gen.planted,
                     "plant a hidden satisfying assignment");
  generate->add_flag("--planted-balanced", gen.planted_balanced,
                     "plant a hidden assignment with balanced clause types "
                     "(hard but satisfiable)");
  generate->add_flag("--filter-satisfiable", gen.filter_satisfiable,
                     "regenerate until the oracle certifies SAT (small N)");

  SolveArgs solve;
  solve.trials.n_trials = 100;
  CLI::App *solve_cmd =
      app.add_subcommand("solve", "run a local-search solver on one file");
  solve_cmd->add_option("file", solve.file, "DIMACS CNF file")->required();
  std::string solve_kind = "walksat";
  solve_cmd->add_option("--solver", solve_kind,
                        "walksat|docsat|gwsat|tabu|novelty");
  solve_cmd->add_option("--p-walk", solve.solver.p_walk, "walk probability");
  solve_cmd->add_option("--r-doc", solve.solver.r_doc,
                        "weight of the TLC-change term (docsat)");
  solve_cmd->add_option("--tabu-len", solve.solver.tabu_len, "tabu length");
  solve_cmd->add_option("--p-novelty", solve.solver.p_novelty,
                        "novelty probability");
  solve_cmd->add_option("--trials", solve.trials.n_trials, "restarts");
  solve_cmd->add_option("--flips-per-var", solve.flips_per_var,
                        "flip budget per trial = this * N");
  solve_cmd->add_option("--seed", solve.seed, "master seed");
  solve_cmd->add_flag("--stop-on-solution,!--no-stop-on-solution",
                      solve.trials.stop_on_solution,
                      "stop restarts after the first solution (default on)");
  solve_cmd->add_flag("--model", solve.print_model, "print a model if solved");
  solve_cmd->add_flag("--lenient", solve.lenient,
                      "tolerate clause-count mismatches in the input");

  BenchArgs bench;
  CLI::App *bench_cmd =
      app.add_subcommand("bench", "run a benchmark campaign from a config");
  bench_cmd->add_option("--config", bench.config_path, "experiment JSON")
      ->required();
  bench_cmd->add_option("--out-dir", bench.out_dir, "output directory");
  auto *seed_opt = bench_cmd->add_option("--seed", bench.seed, "run seed");
  bench_cmd->add_option("--trials", bench.trials, "trials per instance");
  bench_cmd->add_option("--flips-per-var", bench.flips_per_var,
                        "flip budget per trial = this * N");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads (0 = auto)");
  bench_cmd->add_flag("--histogram", bench.histogram,
                      "record the (E, TLC) histogram");
  bench_cmd->add_flag("--crit-stats", bench.crit_stats,
                      "record critical-clause counts per energy");
  bench_cmd->add_flag("--rates", bench.rates,
                      "record clause-category transition rates");
  bench_cmd->add_flag("--stop-on-solution,!--no-stop-on-solution",
                      bench.stop_on_solution,
                      "stop restarts after the first solution");
  bench_cmd->add_option("--solver", bench.solver_kind,
                        "replace configured solvers with this one");
  bench_cmd->add_option("--p-walk", bench.p_walk, "walk probability");
  bench_cmd->add_option("--r-doc", bench.r_doc, "TLC-change weight");
  bench_cmd->add_option("--tabu-len", bench.tabu_len, "tabu length");

  OracleArgs oracle;
  CLI::App *oracle_cmd =
      app.add_subcommand("oracle", "exact satisfiability checks (small N)");
  oracle_cmd->add_option("file", oracle.file, "DIMACS CNF file")->required();
  oracle_cmd->add_option("--mode", oracle.mode, "dpll (default) or enumerate");
  oracle_cmd->add_option("--limit", oracle.limit,
                         "max variables for enumeration");
  oracle_cmd->add_option("--budget", oracle.budget, "DPLL decision budget");
  oracle_cmd->add_flag("--model", oracle.print_witness,
                       "print the witness if satisfiable");
  oracle_cmd->add_flag("--lenient", oracle.lenient,
                       "tolerate clause-count mismatches in the input");

  FitArgs fit;
  CLI::App *fit_cmd = app.add_subcommand(
      "fit", "fit p(N) = prefactor * (1+b)^-N to summary data");
  fit_cmd->add_option("--input", fit.input, "summary.csv")->required();
  fit_cmd->add_option("--solver", fit.solver, "solver label to select");
  fit_cmd->add_option("--column", fit.column,
                      "p_avg (default) or p_avg_quintile");

  std::string rates_input;
  CLI::App *rates_cmd =
      app.add_subcommand("rates", "report critical-clause generation rates");
  rates_cmd->add_option("--input", rates_input, "rates.csv")->required();

  CLI::App *external_cmd = app.add_subcommand(
      "external", "adapter for third-party solver binaries (not bundled)");
  std::string external_solver;
  external_cmd->add_option("--solver", external_solver, "binary name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(generate))
      return cmd_generate(gen);
    if (app.got_subcommand(solve_cmd)) {
      solve.solver.kind = heuristic_kind_from_name(solve_kind);
      return cmd_solve(solve);
    }
    if (app.got_subcommand(bench_cmd)) {
      bench.have_seed = seed_opt->count() > 0;
      return cmd_bench(bench);
    }
    if (app.got_subcommand(oracle_cmd))
      return cmd_oracle(oracle);
    if (app.got_subcommand(fit_cmd))
      return cmd_fit(fit);
    if (app.got_subcommand(rates_cmd))
      return cmd_rates(rates_input);
    if (app.got_subcommand(external_cmd)) {
      std::cerr << "error: no external solver adapters are bundled with this "
                   "build; use the native solvers via 'solve' or 'bench'\n";
      return 2;
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
