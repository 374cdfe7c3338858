#ifndef DOCSAT_ENGINE_HPP
#define DOCSAT_ENGINE_HPP

#include <string>
#include <vector>

#include "docsat/cnf.hpp"
#include "docsat/rng.hpp"

namespace docsat {

enum class HeuristicKind { walksat, docsat, gwsat, tabu, novelty };

const char *heuristic_kind_name(HeuristicKind kind);
HeuristicKind heuristic_kind_from_name(const std::string &name);

// Variable-selection parameters. walksat is exactly docsat with r_doc = 0:
// both run the same scored selection, so equal rng streams give equal
// trajectories.
struct HeuristicConfig {
  HeuristicKind kind = HeuristicKind::walksat;
  double p_walk = 0.5;
  double r_doc = 0.0;     // weight of the TLC-change term (docsat)
  int tabu_len = 20;      // tabu only
  double p_novelty = 0.5; // novelty only
  // Debug switch: score with the opposite sign of the TLC change, i.e.
  // tlc(before) - tlc(after) instead of tlc(after) - tlc(before).
  bool negate_doc_term = false;
  std::string name; // result-file label; derived from parameters if empty

  std::string label() const;
  void validate() const;
};

// Per-trial limits. stop_on_solution stops the restart loop after the
// first solved trial; a single trial always ends when it reaches a
// solution, since a focused step needs an unsatisfied clause.
struct TrialConfig {
  uint64_t max_flips = 0;
  uint32_t n_trials = 1;
  bool stop_on_solution = true;

  void validate() const;
};

struct TrialResult {
  bool solved = false;
  uint64_t flips_used = 0;
  uint32_t final_energy = 0;
  int64_t final_tlc = 0;
  Assignment solution; // verified model, empty unless solved
  uint64_t seed = 0;   // rng seed this trial ran with
};

struct FlipInfo {
  uint64_t flip_index = 0; // 1-based within the trial
  uint32_t clause = 0;     // the selected unsatisfied clause
  int var = 0;
  bool random_step = false; // true when the uniform walk branch was taken
  FlipTransitions transitions;
};

// Optional observation hooks. They never touch the rng, so attaching them
// cannot change a trajectory.
class Instrumentation {
public:
  virtual ~Instrumentation() = default;
  virtual void on_trial_start(uint32_t /*trial*/, uint64_t /*seed*/) {}
  // Called for the initial state and after every flip.
  virtual void on_state(uint32_t /*energy*/, int64_t /*tlc*/,
                        uint32_t /*critical*/) {}
  virtual void on_flip(const FlipInfo & /*info*/) {}
};

struct Pick {
  int var = 0;
  bool random_step = false;
};

// Recency bookkeeping shared by the tabu and novelty variants. A variable
// is tabu while it is among the last `len` flipped ones.
class FlipHistory {
public:
  FlipHistory(int len, int n_vars)
      : len_(static_cast<uint64_t>(len)),
        last_flip_(static_cast<size_t>(n_vars), 0) {}

  bool tabu(int var) const {
    const uint64_t last = last_flip_[static_cast<size_t>(var - 1)];
    return last != 0 && step_ - last < len_;
  }
  uint64_t last_flip(int var) const {
    return last_flip_[static_cast<size_t>(var - 1)];
  }
  void push(int var) { last_flip_[static_cast<size_t>(var - 1)] = ++step_; }

private:
  uint64_t len_;
  uint64_t step_ = 0;
  std::vector<uint64_t> last_flip_;
};

// All pick functions require `clause` to be unsatisfied in `s` and throw
// ClauseNotUnsat otherwise.
Pick pick_var_walksat(const SearchState &s, uint32_t clause, Rng &rng,
                      double p_walk);
Pick pick_var_docsat(const SearchState &s, uint32_t clause, Rng &rng,
                     double p_walk, double r_doc, bool negate_doc_term = false);
Pick pick_var_gwsat(const SearchState &s, uint32_t clause, Rng &rng,
                    double p_walk);
Pick pick_var_tabu(const SearchState &s, uint32_t clause, Rng &rng,
                   double p_walk, const FlipHistory &history);
Pick pick_var_novelty(const SearchState &s, uint32_t clause, Rng &rng,
                      double p_novelty, const FlipHistory &history);

Assignment random_assignment(int n_vars, Rng &rng);

// One focused-search trial from a fresh uniform random assignment.
TrialResult run_trial(const Formula &f, const HeuristicConfig &h,
                      uint64_t max_flips, Rng &rng,
                      Instrumentation *hooks = nullptr);

struct RestartResult {
  uint32_t trials_executed = 0;
  uint32_t n_solved = 0;
  double p_hat = 0; // n_solved / trials_executed
  std::vector<TrialResult> trials;
};

// Independent restarts; trial i uses an rng seeded with
// mix_seed(master_seed, i), so results do not depend on execution order.
RestartResult run_restarts(const Formula &f, const HeuristicConfig &h,
                           const TrialConfig &t, uint64_t master_seed,
                           Instrumentation *hooks = nullptr);

} // namespace docsat

#endif
