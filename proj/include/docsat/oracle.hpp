#ifndef DOCSAT_ORACLE_HPP
#define DOCSAT_ORACLE_HPP

#include <cstdint>
#include <map>

#include "docsat/cnf.hpp"

namespace docsat {

// Exhaustive enumeration result. Exact (E, TLC) statistics over all 2^N
// assignments; the explicit solution list is kept only up to 20 variables.
struct OracleReport {
  bool satisfiable = false;
  uint32_t min_energy = 0;
  // energy -> (tlc -> number of assignments)
  std::map<uint32_t, std::map<int32_t, uint64_t>> tlc_by_energy;
  // bit k (from 0) = value of variable k+1; filled when n_vars <= 20
  std::vector<uint32_t> solution_masks;
  int n_vars = 0;

  uint64_t states_at(uint32_t energy) const;
  // mean TLC over all assignments with the given energy; requires states
  double mean_tlc_at(uint32_t energy) const;
};

Assignment decode_mask(uint32_t mask, int n_vars);

// Walks all 2^N assignments in Gray-code order, maintaining its own
// per-clause true-literal counts (independent of SearchState).
OracleReport enumerate_assignments(const Formula &f, int n_limit = 25);

enum class DpllStatus { satisfiable, unsatisfiable, unknown };

struct DpllResult {
  DpllStatus status = DpllStatus::unknown;
  Assignment witness; // verified model when satisfiable
  uint64_t decisions = 0;
};

// Complete DPLL with unit propagation, no learning. Branches on the
// variable with the most occurrences in active clauses, preferred polarity
// first. Exceeding the decision budget yields `unknown`, never a wrong
// answer.
DpllResult dpll_sat(const Formula &f, uint64_t decision_budget = 50'000'000);

} // namespace docsat

#endif
