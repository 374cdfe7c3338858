#ifndef DOCSAT_EXPERIMENT_HPP
#define DOCSAT_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "docsat/engine.hpp"
#include "docsat/generator.hpp"
#include "docsat/stats.hpp"
#include "docsat/summary.hpp"

namespace docsat {

struct SuiteSpec {
  std::vector<int> n_list;
  double alpha = 4.27;
  int n_instances = 0;
  uint64_t master_seed = 1;
  bool forbid_duplicate_clauses = false;
  bool planted = false;
  bool planted_balanced = false;
  bool filter_satisfiable = false;

  bool empty() const { return n_list.empty() || n_instances == 0; }
};

struct InstrumentationToggles {
  bool histogram = false;
  bool crit_stats = false;
  bool rates = false;
};

// Declarative description of a campaign: which instances, which solvers,
// how many trials, what to record. A campaign's output is a deterministic
// function of this struct, independent of the parallelism degree.
struct ExperimentConfig {
  SuiteSpec suite;                         // generated instances...
  std::vector<std::string> instance_files; // ...or instances from disk
  std::vector<HeuristicConfig> solvers;
  uint32_t n_trials = 100;
  int flips_per_var = 300; // per-trial budget = flips_per_var * N
  bool stop_on_solution = true;
  uint64_t run_seed = 1;
  InstrumentationToggles instrumentation;
  int jobs = 0; // worker threads; 0 = hardware concurrency
  std::string out_dir = "out";

  void validate() const;
};

ExperimentConfig experiment_config_from_json(const std::string &text);
ExperimentConfig load_experiment_config(const std::string &path);
std::string experiment_config_to_json(const ExperimentConfig &cfg);

// Results of one (instance, solver) pair.
struct InstanceRun {
  std::string instance_id;
  int n_vars = 0;
  size_t solver_index = 0;
  std::string solver;
  RestartResult restarts;
  StatsAccumulator stats;
};

struct ExperimentResult {
  std::vector<InstanceRun> runs; // instance-major, solver-minor
  std::vector<SummaryRow> summary;
  std::vector<std::string> failures; // isolated per-instance errors
};

// Loads instance files / generates the configured suite. File failures are
// reported through `failures`, not thrown.
std::vector<SuiteInstance>
materialize_instances(const ExperimentConfig &cfg,
                      std::vector<std::string> &failures);

// Runs the campaign over the given instances on a bounded worker pool.
// Trial i of instance k uses the rng seed
// mix_seed(mix_seed(run_seed, k), i) for every solver, so solvers can be
// compared on identical initial assignments. Shards are merged by index:
// any jobs value yields identical results.
ExperimentResult run_campaign(const ExperimentConfig &cfg,
                              const std::vector<SuiteInstance> &instances);

// Campaign plus output files: trials.csv and summary.csv always,
// histogram.csv / crit.csv / rates.csv per instrumentation toggles, and a
// resolved config.json copy for provenance.
ExperimentResult run_experiment(const ExperimentConfig &cfg);

// CSV row assembly (exposed for tests; deterministic order).
std::vector<TrialRow> trial_rows(const ExperimentConfig &cfg,
                                 const ExperimentResult &result);

} // namespace docsat

#endif
