#ifndef DOCSAT_CNF_HPP
#define DOCSAT_CNF_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "docsat/errors.hpp"

namespace docsat {

// Literals follow the DIMACS convention: a nonzero signed integer whose
// absolute value is the 1-based variable index, negative means negated.
using Lit = int32_t;

inline int lit_var(Lit lit) { return lit < 0 ? -lit : lit; }
inline bool lit_positive(Lit lit) { return lit > 0; }

using Clause = std::array<Lit, 3>;

// assignment[k-1] is the value of variable k.
using Assignment = std::vector<uint8_t>;

struct TlcExtremes {
  Assignment min_assignment;
  Assignment max_assignment;
};

// Immutable 3-SAT instance. Construction precomputes, per variable, the
// lists of clauses it occurs in (split by polarity), which also yield the
// occurrence counts p and n used by the TLC bookkeeping.
class Formula {
public:
  Formula() = default;

  // Validates variable ranges and distinctness within each clause.
  static Formula build(int n_vars, std::vector<Clause> clauses);
  // Same, for clauses of unchecked arity (rejects anything but 3 literals).
  static Formula from_lists(int n_vars,
                            const std::vector<std::vector<Lit>> &clauses);

  int num_vars() const { return n_vars_; }
  uint32_t num_clauses() const { return static_cast<uint32_t>(clauses_.size()); }
  const Clause &clause(uint32_t m) const { return clauses_[m]; }
  const std::vector<Clause> &clauses() const { return clauses_; }

  // Clause indices in which `var` occurs with the given polarity.
  const std::vector<uint32_t> &occurrences(int var, bool positive) const {
    check_var(var);
    return occ_[static_cast<size_t>(var - 1) * 2 + (positive ? 1 : 0)];
  }

  int pos_count(int var) const {
    return static_cast<int>(occurrences(var, true).size());
  }
  int neg_count(int var) const {
    return static_cast<int>(occurrences(var, false).size());
  }
  // p_k - n_k; the sign determines the variable's value in the extreme
  // TLC assignments, independent of all other variables.
  int occ_diff(int var) const { return pos_count(var) - neg_count(var); }

  // Assignments minimizing / maximizing the total number of true literals.
  // The per-variable problems are independent: the max assignment sets
  // x_k = 1 exactly when p_k > n_k. Variables with p_k = n_k do not affect
  // the TLC and are set to 0 in both extremes.
  TlcExtremes tlc_extremes() const;

  void check_var(int var) const {
    if (var < 1 || var > n_vars_)
      throw Error(ErrorCode::out_of_range_variable,
                  "variable " + std::to_string(var) + " not in 1.." +
                      std::to_string(n_vars_));
  }

private:
  int n_vars_ = 0;
  std::vector<Clause> clauses_;
  // occ_[2*(var-1) + polarity], polarity 1 = positive occurrence.
  std::vector<std::vector<uint32_t>> occ_;
};

// Clause category changes caused by one flip. A critical clause has exactly
// one true literal; flips create criticals from both neighbouring categories
// and destroy them in both directions.
struct FlipTransitions {
  uint32_t oversat_to_crit = 0; // true-literal count 2 -> 1
  uint32_t unsat_to_crit = 0;   // 0 -> 1
  uint32_t crit_to_unsat = 0;   // 1 -> 0 (clause broken)
  uint32_t crit_to_oversat = 0; // 1 -> 2

  uint32_t crit_created() const { return oversat_to_crit + unsat_to_crit; }
  uint32_t crit_destroyed() const { return crit_to_unsat + crit_to_oversat; }
  int32_t crit_change() const {
    return static_cast<int32_t>(crit_created()) -
           static_cast<int32_t>(crit_destroyed());
  }
};

// Mutable search state over a Formula: the assignment plus incrementally
// maintained per-clause true-literal counts, the unsatisfied-clause set,
// energy, TLC and the critical-clause count. One flip costs time
// proportional to the occurrence degree of the flipped variable.
//
// The unsatisfied set is a dense array with a per-clause position index,
// giving O(1) insert/remove and uniform random sampling.
//
// Single-threaded: exactly one owner may mutate a state at a time. The
// underlying Formula is immutable and may be shared across threads.
class SearchState {
public:
  SearchState(const Formula &f, Assignment assignment);

  const Formula &formula() const { return *formula_; }
  bool value(int var) const {
    formula_->check_var(var);
    return assignment_[static_cast<size_t>(var - 1)] != 0;
  }
  const Assignment &assignment() const { return assignment_; }

  uint32_t energy() const { return static_cast<uint32_t>(unsat_.size()); }
  int64_t tlc() const { return tlc_; }
  uint32_t critical_count() const { return n_crit_; }
  uint8_t clause_true_count(uint32_t m) const { return num_true_[m]; }
  const std::vector<uint32_t> &unsat_clauses() const { return unsat_; }
  bool clause_unsat(uint32_t m) const { return num_true_[m] == 0; }

  // Toggles variable `var` and updates all bookkeeping. Returns the clause
  // category transitions caused by the flip.
  FlipTransitions flip(int var);

  // Number of clauses that flipping `var` would break: critical clauses
  // whose single true literal belongs to `var`.
  int breakcount(int var) const;

  // Number of unsatisfied clauses that flipping `var` would satisfy.
  int makecount(int var) const;

  // Change in the total number of true literals a flip of `var` would
  // cause: tlc(after) - tlc(before). Equals p_k - n_k when x_k = 0 and
  // n_k - p_k when x_k = 1.
  int tlc_delta(int var) const {
    const int diff = formula_->occ_diff(var);
    return assignment_[static_cast<size_t>(var - 1)] ? -diff : diff;
  }

private:
  void unsat_insert(uint32_t m);
  void unsat_remove(uint32_t m);

  static constexpr uint32_t npos = ~0u;

  const Formula *formula_;
  Assignment assignment_;
  std::vector<uint8_t> num_true_;
  std::vector<uint32_t> unsat_;     // dense array of unsatisfied clauses
  std::vector<uint32_t> unsat_pos_; // clause -> position in unsat_, or npos
  int64_t tlc_ = 0;
  uint32_t n_crit_ = 0;
};

} // namespace docsat

#endif
