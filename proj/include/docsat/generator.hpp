#ifndef DOCSAT_GENERATOR_HPP
#define DOCSAT_GENERATOR_HPP

#include <string>
#include <vector>

#include "docsat/cnf.hpp"
#include "docsat/rng.hpp"

namespace docsat {

// Uniform random 3-SAT at clause density alpha: M = round(alpha * N)
// clauses, each over 3 distinct variables drawn uniformly, polarities by
// fair coin. Three opt-in ways to bias toward satisfiable instances:
//   planted            - per clause, polarities are redrawn until the
//                        clause is satisfied by a hidden random assignment
//                        (conditioned-uniform; such instances are easy)
//   planted_balanced   - plant a hidden assignment and draw each clause
//                        with exactly one or two satisfying literals, equal
//                        odds. Every variable then appears aligned with the
//                        plant as often as against it in expectation, so
//                        the plant leaves no local bias and the instances
//                        stay hard for local search while being satisfiable
//                        by construction
//   filter_satisfiable - regenerate until the DPLL oracle certifies SAT
//                        (small N only)
// Output is a pure function of the config, including the seed.
struct GenConfig {
  int n_vars = 0;
  double alpha = 4.27;
  uint64_t seed = 0;
  bool forbid_duplicate_clauses = false;
  bool planted = false;
  bool planted_balanced = false;
  bool filter_satisfiable = false;

  uint32_t num_clauses() const;
  void validate() const;
};

// Largest N accepted in filter_satisfiable mode.
inline constexpr int kFilterVarLimit = 500;

Formula generate(const GenConfig &cfg);
// Variant exposing the planted assignment (empty when not planted).
Formula generate(const GenConfig &cfg, Assignment &planted_out);

struct SuiteInstance {
  std::string instance_id; // "w{N}v{index}"
  int n_vars = 0;
  uint64_t seed = 0;
  Formula formula;
};

// One instance per (N, index) pair, N-major order. The instance seed is
// mix_seed(mix_seed(master_seed, N), index), so the formula for a given
// (N, index) does not depend on the rest of the suite.
std::vector<SuiteInstance> generate_suite(const std::vector<int> &n_list,
                                          double alpha, int n_instances,
                                          uint64_t master_seed,
                                          const GenConfig &flags = {});

} // namespace docsat

#endif
