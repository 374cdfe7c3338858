#include "docsat/experiment.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "docsat/dimacs.hpp"
#include "json.hpp"

namespace docsat {

namespace {

using nlohmann::json;

constexpr uint32_t kShardTrials = 64;

std::string path_stem(const std::string &path) {
  return std::filesystem::path(path).stem().string();
}

} // namespace

void ExperimentConfig::validate() const {
  const bool have_suite = !suite.empty();
  const bool have_files = !instance_files.empty();
  if (have_suite == have_files)
    throw Error(ErrorCode::invalid_config,
                "exactly one of suite and instances must be given");
  if (solvers.empty())
    throw Error(ErrorCode::invalid_config, "at least one solver required");
  for (const auto &solver : solvers)
    solver.validate();
  if (n_trials < 1)
    throw Error(ErrorCode::invalid_config, "n_trials must be >= 1");
  if (flips_per_var < 0)
    throw Error(ErrorCode::invalid_config, "flips_per_var must be >= 0");
  if (jobs < 0)
    throw Error(ErrorCode::invalid_config, "jobs must be >= 0");
  if (have_suite) {
    if (suite.alpha <= 0)
      throw Error(ErrorCode::invalid_config, "alpha must be > 0");
    for (int n : suite.n_list)
      if (n < 3)
        throw Error(ErrorCode::invalid_config, "suite sizes must be >= 3");
  }
}

namespace {

HeuristicConfig solver_from_json(const json &j) {
  HeuristicConfig h;
  h.kind = heuristic_kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("p_walk"))
    h.p_walk = j["p_walk"].get<double>();
  if (j.contains("r_doc"))
    h.r_doc = j["r_doc"].get<double>();
  if (j.contains("tabu_len"))
    h.tabu_len = j["tabu_len"].get<int>();
  if (j.contains("p_novelty"))
    h.p_novelty = j["p_novelty"].get<double>();
  if (j.contains("negate_doc_term"))
    h.negate_doc_term = j["negate_doc_term"].get<bool>();
  if (j.contains("name"))
    h.name = j["name"].get<std::string>();
  return h;
}

json solver_to_json(const HeuristicConfig &h) {
  json j;
  j["kind"] = heuristic_kind_name(h.kind);
  j["p_walk"] = h.p_walk;
  if (h.kind == HeuristicKind::docsat) {
    j["r_doc"] = h.r_doc;
    if (h.negate_doc_term)
      j["negate_doc_term"] = true;
  }
  if (h.kind == HeuristicKind::tabu)
    j["tabu_len"] = h.tabu_len;
  if (h.kind == HeuristicKind::novelty)
    j["p_novelty"] = h.p_novelty;
  if (!h.name.empty())
    j["name"] = h.name;
  return j;
}

} // namespace

ExperimentConfig experiment_config_from_json(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::invalid_config,
                std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("suite")) {
      const json &s = j["suite"];
      cfg.suite.n_list = s.at("n_list").get<std::vector<int>>();
      cfg.suite.alpha = s.value("alpha", 4.27);
      cfg.suite.n_instances = s.at("n_instances").get<int>();
      cfg.suite.master_seed = s.value("master_seed", uint64_t{1});
      cfg.suite.forbid_duplicate_clauses =
          s.value("forbid_duplicate_clauses", false);
      cfg.suite.planted = s.value("planted", false);
      cfg.suite.planted_balanced = s.value("planted_balanced", false);
      cfg.suite.filter_satisfiable = s.value("filter_satisfiable", false);
    }
    if (j.contains("instances"))
      cfg.instance_files = j["instances"].get<std::vector<std::string>>();
    for (const json &s : j.at("solvers"))
      cfg.solvers.push_back(solver_from_json(s));
    if (j.contains("trials")) {
      const json &t = j["trials"];
      cfg.n_trials = t.value("n_trials", cfg.n_trials);
      cfg.flips_per_var = t.value("flips_per_var", cfg.flips_per_var);
      cfg.stop_on_solution = t.value("stop_on_solution", cfg.stop_on_solution);
    }
    cfg.run_seed = j.value("seed", cfg.run_seed);
    if (j.contains("instrumentation")) {
      const json &i = j["instrumentation"];
      cfg.instrumentation.histogram = i.value("histogram", false);
      cfg.instrumentation.crit_stats = i.value("crit_stats", false);
      cfg.instrumentation.rates = i.value("rates", false);
    }
    cfg.jobs = j.value("jobs", 0);
    cfg.out_dir = j.value("out_dir", cfg.out_dir);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::invalid_config, e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::invalid_config, "cannot open config " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return experiment_config_from_json(buffer.str());
}

std::string experiment_config_to_json(const ExperimentConfig &cfg) {
  json j;
  if (!cfg.suite.empty()) {
    json s;
    s["n_list"] = cfg.suite.n_list;
    s["alpha"] = cfg.suite.alpha;
    s["n_instances"] = cfg.suite.n_instances;
    s["master_seed"] = cfg.suite.master_seed;
    s["forbid_duplicate_clauses"] = cfg.suite.forbid_duplicate_clauses;
    s["planted"] = cfg.suite.planted;
    s["planted_balanced"] = cfg.suite.planted_balanced;
    s["filter_satisfiable"] = cfg.suite.filter_satisfiable;
    j["suite"] = s;
  }
  if (!cfg.instance_files.empty())
    j["instances"] = cfg.instance_files;
  j["solvers"] = json::array();
  for (const auto &solver : cfg.solvers)
    j["solvers"].push_back(solver_to_json(solver));
  j["trials"] = {{"n_trials", cfg.n_trials},
                 {"flips_per_var", cfg.flips_per_var},
                 {"stop_on_solution", cfg.stop_on_solution}};
  j["seed"] = cfg.run_seed;
  j["instrumentation"] = {{"histogram", cfg.instrumentation.histogram},
                          {"crit_stats", cfg.instrumentation.crit_stats},
                          {"rates", cfg.instrumentation.rates}};
  j["jobs"] = cfg.jobs;
  j["out_dir"] = cfg.out_dir;
  return j.dump(2) + "\n";
}

std::vector<SuiteInstance>
materialize_instances(const ExperimentConfig &cfg,
                      std::vector<std::string> &failures) {
  cfg.validate();
  if (!cfg.instance_files.empty()) {
    std::vector<SuiteInstance> instances;
    for (const std::string &path : cfg.instance_files) {
      try {
        SuiteInstance inst;
        inst.formula = read_dimacs_file(path);
        inst.instance_id = path_stem(path);
        inst.n_vars = inst.formula.num_vars();
        inst.seed = 0;
        instances.push_back(std::move(inst));
      } catch (const Error &e) {
        failures.push_back(path + ": " + e.what());
      }
    }
    return instances;
  }
  GenConfig flags;
  flags.forbid_duplicate_clauses = cfg.suite.forbid_duplicate_clauses;
  flags.planted = cfg.suite.planted;
  flags.planted_balanced = cfg.suite.planted_balanced;
  flags.filter_satisfiable = cfg.suite.filter_satisfiable;
  return generate_suite(cfg.suite.n_list, cfg.suite.alpha,
                        cfg.suite.n_instances, cfg.suite.master_seed, flags);
}

namespace {

struct Shard {
  size_t run_index = 0;      // instance_index * n_solvers + solver_index
  size_t instance_index = 0;
  size_t solver_index = 0;
  uint32_t trial_begin = 0;
  uint32_t trial_end = 0;
  bool stop_on_solution = false;
};

struct ShardResult {
  std::vector<TrialResult> trials;
  StatsAccumulator stats;
  uint32_t trials_executed = 0;
};

void run_shard(const ExperimentConfig &cfg, const SuiteInstance &instance,
               const HeuristicConfig &solver, const Shard &shard,
               ShardResult &out) {
  out.stats.record_histogram = cfg.instrumentation.histogram;
  out.stats.record_crit = cfg.instrumentation.crit_stats;
  out.stats.record_rates = cfg.instrumentation.rates;
  StatsAccumulator *hooks =
      (cfg.instrumentation.histogram || cfg.instrumentation.crit_stats ||
       cfg.instrumentation.rates)
          ? &out.stats
          : nullptr;
  const uint64_t instance_master =
      mix_seed(cfg.run_seed, static_cast<uint64_t>(shard.instance_index));
  const uint64_t max_flips =
      static_cast<uint64_t>(cfg.flips_per_var) *
      static_cast<uint64_t>(instance.formula.num_vars());
  for (uint32_t trial = shard.trial_begin; trial < shard.trial_end; ++trial) {
    const uint64_t seed = mix_seed(instance_master, trial);
    Rng rng(seed);
    TrialResult result = run_trial(instance.formula, solver, max_flips, rng,
                                   hooks);
    result.seed = seed;
    const bool solved = result.solved;
    out.trials.push_back(std::move(result));
    ++out.trials_executed;
    if (solved && shard.stop_on_solution)
      break;
  }
}

} // namespace

ExperimentResult run_campaign(const ExperimentConfig &cfg,
                              const std::vector<SuiteInstance> &instances) {
  cfg.validate();
  const size_t n_solvers = cfg.solvers.size();

  std::vector<Shard> shards;
  std::vector<size_t> shard_offset; // first shard of each run
  shard_offset.reserve(instances.size() * n_solvers);
  for (size_t i = 0; i < instances.size(); ++i) {
    for (size_t s = 0; s < n_solvers; ++s) {
      shard_offset.push_back(shards.size());
      const size_t run_index = i * n_solvers + s;
      if (cfg.stop_on_solution) {
        // sequential semantics: later trials depend on earlier outcomes
        shards.push_back({run_index, i, s, 0, cfg.n_trials, true});
      } else {
        for (uint32_t begin = 0; begin < cfg.n_trials; begin += kShardTrials)
          shards.push_back({run_index, i, s, begin,
                            std::min(cfg.n_trials, begin + kShardTrials),
                            false});
      }
    }
  }

  std::vector<ShardResult> results(shards.size());
  std::atomic<size_t> next{0};
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const size_t n_workers =
      std::min<size_t>(cfg.jobs > 0 ? static_cast<size_t>(cfg.jobs) : hardware,
                       std::max<size_t>(shards.size(), 1));
  auto worker = [&]() {
    for (;;) {
      const size_t index = next.fetch_add(1);
      if (index >= shards.size())
        return;
      const Shard &shard = shards[index];
      run_shard(cfg, instances[shard.instance_index],
                cfg.solvers[shard.solver_index], shard, results[index]);
    }
  };
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (size_t w = 0; w < n_workers; ++w)
      pool.emplace_back(worker);
    for (auto &thread : pool)
      thread.join();
  }

  ExperimentResult out;
  for (size_t i = 0; i < instances.size(); ++i) {
    for (size_t s = 0; s < n_solvers; ++s) {
      const size_t run_index = i * n_solvers + s;
      InstanceRun run;
      run.instance_id = instances[i].instance_id;
      run.n_vars = instances[i].formula.num_vars();
      run.solver_index = s;
      run.solver = cfg.solvers[s].label();
      const size_t first = shard_offset[run_index];
      const size_t last = run_index + 1 < shard_offset.size()
                              ? shard_offset[run_index + 1]
                              : shards.size();
      for (size_t k = first; k < last; ++k) {
        ShardResult &shard_result = results[k];
        run.restarts.trials_executed += shard_result.trials_executed;
        for (auto &trial : shard_result.trials) {
          run.restarts.n_solved += trial.solved ? 1 : 0;
          run.restarts.trials.push_back(std::move(trial));
        }
        run.stats.merge(shard_result.stats);
      }
      run.restarts.p_hat =
          run.restarts.trials_executed == 0
              ? 0.0
              : static_cast<double>(run.restarts.n_solved) /
                    static_cast<double>(run.restarts.trials_executed);
      out.runs.push_back(std::move(run));
    }
  }

  if (!out.runs.empty()) {
    std::vector<InstanceOutcome> outcomes;
    outcomes.reserve(out.runs.size());
    for (const auto &run : out.runs)
      outcomes.push_back({run.instance_id, run.n_vars, run.solver,
                          run.restarts.p_hat, run.restarts.n_solved > 0});
    out.summary = aggregate_summary(outcomes);
  }
  return out;
}

std::vector<TrialRow> trial_rows(const ExperimentConfig &cfg,
                                 const ExperimentResult &result) {
  std::vector<TrialRow> rows;
  for (const auto &run : result.runs) {
    const HeuristicConfig &solver = cfg.solvers[run.solver_index];
    for (size_t t = 0; t < run.restarts.trials.size(); ++t) {
      const TrialResult &trial = run.restarts.trials[t];
      TrialRow row;
      row.instance_id = run.instance_id;
      row.solver = run.solver;
      row.p_walk = solver.p_walk;
      row.r_doc = solver.kind == HeuristicKind::docsat ? solver.r_doc : 0.0;
      row.seed = trial.seed;
      row.trial = static_cast<uint32_t>(t);
      row.solved = trial.solved;
      row.flips_used = trial.flips_used;
      row.final_energy = trial.final_energy;
      row.final_tlc = trial.final_tlc;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

ExperimentResult run_experiment(const ExperimentConfig &cfg) {
  cfg.validate();
  std::vector<std::string> failures;
  const std::vector<SuiteInstance> instances =
      materialize_instances(cfg, failures);
  ExperimentResult result = run_campaign(cfg, instances);
  result.failures = std::move(failures);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec)
    throw Error(ErrorCode::io_error,
                "cannot create output directory " + cfg.out_dir);
  const fs::path dir(cfg.out_dir);

  {
    std::ostringstream buf;
    write_trials_csv(buf, trial_rows(cfg, result));
    write_csv_file((dir / "trials.csv").string(), buf.str());
  }
  {
    std::ostringstream buf;
    write_summary_csv(buf, result.summary);
    write_csv_file((dir / "summary.csv").string(), buf.str());
  }
  if (cfg.instrumentation.histogram) {
    std::vector<HistogramRow> rows;
    for (const auto &run : result.runs) {
      auto part = run.stats.histogram_rows(run.instance_id, run.solver);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    std::ostringstream buf;
    write_histogram_csv(buf, rows);
    write_csv_file((dir / "histogram.csv").string(), buf.str());
  }
  if (cfg.instrumentation.crit_stats) {
    std::vector<CritRow> rows;
    for (const auto &run : result.runs) {
      auto part = run.stats.crit_rows(run.instance_id, run.solver);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    std::ostringstream buf;
    write_crit_csv(buf, rows);
    write_csv_file((dir / "crit.csv").string(), buf.str());
  }
  if (cfg.instrumentation.rates) {
    std::vector<RatesRow> rows;
    rows.reserve(result.runs.size());
    for (const auto &run : result.runs)
      rows.push_back(run.stats.rates_row(run.instance_id, run.solver));
    std::ostringstream buf;
    write_rates_csv(buf, rows);
    write_csv_file((dir / "rates.csv").string(), buf.str());
  }
  {
    std::ofstream out(dir / "config.json", std::ios::binary);
    if (!out)
      throw Error(ErrorCode::io_error, "cannot write resolved config");
    out << experiment_config_to_json(cfg);
  }
  return result;
}

} // namespace docsat
