#include "docsat/cnf.hpp"

#include <string>

namespace docsat {

const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::out_of_range_variable: return "OutOfRangeVariable";
  case ErrorCode::repeated_variable_in_clause: return "RepeatedVariableInClause";
  case ErrorCode::wrong_clause_arity: return "WrongClauseArity";
  case ErrorCode::length_mismatch: return "LengthMismatch";
  case ErrorCode::clause_not_unsat: return "ClauseNotUnsat";
  case ErrorCode::missing_header: return "MissingHeader";
  case ErrorCode::malformed_header: return "MalformedHeader";
  case ErrorCode::literal_out_of_range: return "LiteralOutOfRange";
  case ErrorCode::unterminated_clause: return "UnterminatedClause";
  case ErrorCode::clause_count_mismatch: return "ClauseCountMismatch";
  case ErrorCode::non_ternary_clause: return "NonTernaryClause";
  case ErrorCode::invalid_config: return "InvalidConfig";
  case ErrorCode::oracle_limit_exceeded: return "OracleLimitExceeded";
  case ErrorCode::resample_budget_exhausted: return "ResampleBudgetExhausted";
  case ErrorCode::limit_exceeded: return "LimitExceeded";
  case ErrorCode::insufficient_points: return "InsufficientPoints";
  case ErrorCode::nonpositive_probability: return "NonpositiveProbability";
  case ErrorCode::empty_input: return "EmptyInput";
  case ErrorCode::no_nonrandom_flips: return "NoNonrandomFlips";
  case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

Formula Formula::build(int n_vars, std::vector<Clause> clauses) {
  if (n_vars < 0)
    throw Error(ErrorCode::invalid_config, "negative variable count");
  Formula f;
  f.n_vars_ = n_vars;
  f.occ_.assign(static_cast<size_t>(n_vars) * 2, {});
  for (size_t m = 0; m < clauses.size(); ++m) {
    const Clause &c = clauses[m];
    for (Lit lit : c) {
      const int var = lit_var(lit);
      if (lit == 0 || var > n_vars)
        throw Error(ErrorCode::out_of_range_variable,
                    "literal " + std::to_string(lit) + " in clause " +
                        std::to_string(m + 1));
    }
    if (lit_var(c[0]) == lit_var(c[1]) || lit_var(c[0]) == lit_var(c[2]) ||
        lit_var(c[1]) == lit_var(c[2]))
      throw Error(ErrorCode::repeated_variable_in_clause,
                  "clause " + std::to_string(m + 1));
    for (Lit lit : c)
      f.occ_[static_cast<size_t>(lit_var(lit) - 1) * 2 +
             (lit_positive(lit) ? 1 : 0)]
          .push_back(static_cast<uint32_t>(m));
  }
  f.clauses_ = std::move(clauses);
  return f;
}

Formula Formula::from_lists(int n_vars, const std::vector<std::vector<Lit>> &clauses) {
  std::vector<Clause> fixed;
  fixed.reserve(clauses.size());
  for (size_t m = 0; m < clauses.size(); ++m) {
    if (clauses[m].size() != 3)
      throw Error(ErrorCode::wrong_clause_arity,
                  "clause " + std::to_string(m + 1) + " has " +
                      std::to_string(clauses[m].size()) + " literals");
    fixed.push_back({clauses[m][0], clauses[m][1], clauses[m][2]});
  }
  return build(n_vars, std::move(fixed));
}

TlcExtremes Formula::tlc_extremes() const {
  TlcExtremes ext;
  ext.min_assignment.assign(static_cast<size_t>(n_vars_), 0);
  ext.max_assignment.assign(static_cast<size_t>(n_vars_), 0);
  for (int var = 1; var <= n_vars_; ++var) {
    const int diff = occ_diff(var);
    if (diff > 0)
      ext.max_assignment[static_cast<size_t>(var - 1)] = 1;
    else if (diff < 0)
      ext.min_assignment[static_cast<size_t>(var - 1)] = 1;
    // diff == 0: value irrelevant for the TLC, fixed to 0 in both.
  }
  return ext;
}

SearchState::SearchState(const Formula &f, Assignment assignment)
    : formula_(&f), assignment_(std::move(assignment)) {
  if (assignment_.size() != static_cast<size_t>(f.num_vars()))
    throw Error(ErrorCode::length_mismatch,
                "assignment has " + std::to_string(assignment_.size()) +
                    " values for " + std::to_string(f.num_vars()) +
                    " variables");
  const uint32_t m = f.num_clauses();
  num_true_.assign(m, 0);
  unsat_pos_.assign(m, npos);
  for (uint32_t c = 0; c < m; ++c) {
    uint8_t count = 0;
    for (Lit lit : f.clause(c)) {
      const bool val = assignment_[static_cast<size_t>(lit_var(lit) - 1)] != 0;
      if (val == lit_positive(lit))
        ++count;
    }
    num_true_[c] = count;
    tlc_ += count;
    if (count == 0)
      unsat_insert(c);
    else if (count == 1)
      ++n_crit_;
  }
}

void SearchState::unsat_insert(uint32_t m) {
  unsat_pos_[m] = static_cast<uint32_t>(unsat_.size());
  unsat_.push_back(m);
}

void SearchState::unsat_remove(uint32_t m) {
  const uint32_t pos = unsat_pos_[m];
  const uint32_t last = unsat_.back();
  unsat_[pos] = last;
  unsat_pos_[last] = pos;
  unsat_.pop_back();
  unsat_pos_[m] = npos;
}

FlipTransitions SearchState::flip(int var) {
  formula_->check_var(var);
  const size_t idx = static_cast<size_t>(var - 1);
  const bool was_true = assignment_[idx] != 0;
  assignment_[idx] = was_true ? 0 : 1;

  FlipTransitions t;
  // Literals of `var` that were true lose a true literal...
  for (uint32_t c : formula_->occurrences(var, was_true)) {
    const uint8_t now = --num_true_[c];
    if (now == 0) {
      unsat_insert(c);
      --n_crit_;
      ++t.crit_to_unsat;
    } else if (now == 1) {
      ++n_crit_;
      ++t.oversat_to_crit;
    }
  }
  // ...and the opposite-polarity occurrences gain one.
  for (uint32_t c : formula_->occurrences(var, !was_true)) {
    const uint8_t now = ++num_true_[c];
    if (now == 1) {
      unsat_remove(c);
      ++n_crit_;
      ++t.unsat_to_crit;
    } else if (now == 2) {
      --n_crit_;
      ++t.crit_to_oversat;
    }
  }
  tlc_ += was_true ? -formula_->occ_diff(var) : formula_->occ_diff(var);
  return t;
}

int SearchState::breakcount(int var) const {
  const bool val = value(var);
  int count = 0;
  for (uint32_t c : formula_->occurrences(var, val))
    if (num_true_[c] == 1)
      ++count;
  return count;
}

int SearchState::makecount(int var) const {
  const bool val = value(var);
  int count = 0;
  for (uint32_t c : formula_->occurrences(var, !val))
    if (num_true_[c] == 0)
      ++count;
  return count;
}

} // namespace docsat
