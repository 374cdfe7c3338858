#include "docsat/oracle.hpp"

#include <algorithm>
#include <bit>

namespace docsat {

uint64_t OracleReport::states_at(uint32_t energy) const {
  auto it = tlc_by_energy.find(energy);
  if (it == tlc_by_energy.end())
    return 0;
  uint64_t n = 0;
  for (const auto &[tlc, count] : it->second)
    n += count;
  return n;
}

double OracleReport::mean_tlc_at(uint32_t energy) const {
  auto it = tlc_by_energy.find(energy);
  if (it == tlc_by_energy.end() || it->second.empty())
    throw Error(ErrorCode::empty_input,
                "no assignments with energy " + std::to_string(energy));
  double sum = 0;
  uint64_t n = 0;
  for (const auto &[tlc, count] : it->second) {
    sum += static_cast<double>(tlc) * static_cast<double>(count);
    n += count;
  }
  return sum / static_cast<double>(n);
}

Assignment decode_mask(uint32_t mask, int n_vars) {
  Assignment x(static_cast<size_t>(n_vars));
  for (int k = 0; k < n_vars; ++k)
    x[static_cast<size_t>(k)] = (mask >> k) & 1;
  return x;
}

OracleReport enumerate_assignments(const Formula &f, int n_limit) {
  const int n = f.num_vars();
  if (n > n_limit)
    throw Error(ErrorCode::limit_exceeded,
                std::to_string(n) + " variables exceeds enumeration limit " +
                    std::to_string(n_limit));
  const uint32_t m = f.num_clauses();
  const bool keep_solutions = n <= 20;

  OracleReport report;
  report.n_vars = n;
  report.min_energy = m + 1;

  // counts for the all-false assignment
  std::vector<uint8_t> num_true(m, 0);
  int64_t tlc = 0;
  uint32_t energy = 0;
  for (uint32_t c = 0; c < m; ++c) {
    uint8_t count = 0;
    for (Lit lit : f.clause(c))
      if (!lit_positive(lit))
        ++count;
    num_true[c] = count;
    tlc += count;
    if (count == 0)
      ++energy;
  }

  uint32_t mask = 0;
  const uint64_t total = uint64_t{1} << n;
  for (uint64_t i = 0;; ++i) {
    ++report.tlc_by_energy[energy][static_cast<int32_t>(tlc)];
    if (energy < report.min_energy)
      report.min_energy = energy;
    if (energy == 0 && keep_solutions)
      report.solution_masks.push_back(mask);
    if (i + 1 == total)
      break;
    // Gray-code step: exactly one variable changes between iterations.
    const int bit = std::countr_zero(i + 1);
    const int var = bit + 1;
    const bool becomes_true = ((mask >> bit) & 1) == 0;
    mask ^= uint32_t{1} << bit;
    for (uint32_t c : f.occurrences(var, becomes_true)) {
      if (++num_true[c] == 1)
        --energy;
    }
    for (uint32_t c : f.occurrences(var, !becomes_true)) {
      if (--num_true[c] == 0)
        ++energy;
    }
    tlc += becomes_true ? f.occ_diff(var) : -f.occ_diff(var);
  }

  report.satisfiable = report.min_energy == 0;
  return report;
}

namespace {

// Counter-based DPLL working on the occurrence lists. Assignments are
// undone through an explicit trail, so recursion frames stay small.
class Dpll {
public:
  Dpll(const Formula &f, uint64_t budget)
      : f_(f), budget_(budget),
        value_(static_cast<size_t>(f.num_vars()), -1),
        n_unassigned_(f.num_clauses(), 3), n_sat_(f.num_clauses(), 0) {}

  DpllResult run() {
    DpllResult result;
    if (f_.num_clauses() == 0) {
      result.status = DpllStatus::satisfiable;
      result.witness.assign(static_cast<size_t>(f_.num_vars()), 0);
      return result;
    }
    const Outcome out = search();
    result.decisions = decisions_;
    if (out == Outcome::sat) {
      result.status = DpllStatus::satisfiable;
      result.witness.resize(static_cast<size_t>(f_.num_vars()));
      for (size_t k = 0; k < result.witness.size(); ++k)
        result.witness[k] = value_[k] == 1 ? 1 : 0;
    } else if (out == Outcome::unsat) {
      result.status = DpllStatus::unsatisfiable;
    }
    return result;
  }

private:
  enum class Outcome { sat, unsat, unknown };

  bool assign(int var, bool val, std::vector<Lit> &units) {
    value_[static_cast<size_t>(var - 1)] = val ? 1 : 0;
    trail_.push_back(val ? var : -var);
    bool conflict = false;
    for (int pol = 0; pol < 2; ++pol) {
      const bool positive = pol == 1;
      for (uint32_t c : f_.occurrences(var, positive)) {
        --n_unassigned_[c];
        if (positive == val) {
          if (++n_sat_[c] == 1)
            ++n_clauses_sat_;
        } else if (n_sat_[c] == 0) {
          if (n_unassigned_[c] == 0)
            conflict = true;
          else if (n_unassigned_[c] == 1)
            units.push_back(unit_literal(c));
        }
      }
    }
    return !conflict;
  }

  Lit unit_literal(uint32_t c) const {
    for (Lit lit : f_.clause(c))
      if (value_[static_cast<size_t>(lit_var(lit) - 1)] < 0)
        return lit;
    return 0; // unreachable while counters are consistent
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      const Lit lit = trail_.back();
      trail_.pop_back();
      const int var = lit_var(lit);
      const bool val = lit_positive(lit);
      value_[static_cast<size_t>(var - 1)] = -1;
      for (int pol = 0; pol < 2; ++pol) {
        const bool positive = pol == 1;
        for (uint32_t c : f_.occurrences(var, positive)) {
          ++n_unassigned_[c];
          if (positive == val && --n_sat_[c] == 0)
            --n_clauses_sat_;
        }
      }
    }
  }

  // Propagates the unit queue; false on conflict.
  bool propagate(std::vector<Lit> units) {
    while (!units.empty()) {
      const Lit lit = units.back();
      units.pop_back();
      const int var = lit_var(lit);
      const int8_t current = value_[static_cast<size_t>(var - 1)];
      if (current >= 0) {
        if ((current == 1) != lit_positive(lit))
          return false;
        continue;
      }
      if (!assign(var, lit_positive(lit), units))
        return false;
    }
    return true;
  }

  int pick_branch_var(bool &preferred) const {
    // most occurrences in clauses not yet satisfied
    std::vector<uint32_t> pos(static_cast<size_t>(f_.num_vars()), 0);
    std::vector<uint32_t> neg(static_cast<size_t>(f_.num_vars()), 0);
    for (uint32_t c = 0; c < f_.num_clauses(); ++c) {
      if (n_sat_[c] > 0)
        continue;
      for (Lit lit : f_.clause(c)) {
        const size_t idx = static_cast<size_t>(lit_var(lit) - 1);
        if (value_[idx] >= 0)
          continue;
        if (lit_positive(lit))
          ++pos[idx];
        else
          ++neg[idx];
      }
    }
    int best = 0;
    uint64_t best_count = 0;
    for (int var = 1; var <= f_.num_vars(); ++var) {
      const size_t idx = static_cast<size_t>(var - 1);
      if (value_[idx] >= 0)
        continue;
      const uint64_t count = pos[idx] + neg[idx];
      if (count > best_count) {
        best_count = count;
        best = var;
      }
    }
    if (best != 0)
      preferred = pos[static_cast<size_t>(best - 1)] >=
                  neg[static_cast<size_t>(best - 1)];
    return best;
  }

  Outcome search() {
    if (n_clauses_sat_ == f_.num_clauses())
      return Outcome::sat;
    bool preferred = true;
    const int var = pick_branch_var(preferred);
    if (var == 0)
      return Outcome::sat; // every active clause is satisfied
    if (++decisions_ > budget_)
      return Outcome::unknown;
    bool saw_unknown = false;
    for (int side = 0; side < 2; ++side) {
      const bool val = side == 0 ? preferred : !preferred;
      const size_t mark = trail_.size();
      std::vector<Lit> units;
      if (assign(var, val, units) && propagate(std::move(units))) {
        const Outcome sub = search();
        if (sub == Outcome::sat)
          return sub;
        if (sub == Outcome::unknown)
          saw_unknown = true;
      }
      undo_to(mark);
    }
    return saw_unknown ? Outcome::unknown : Outcome::unsat;
  }

  const Formula &f_;
  uint64_t budget_;
  uint64_t decisions_ = 0;
  std::vector<int8_t> value_;
  std::vector<uint8_t> n_unassigned_;
  std::vector<uint8_t> n_sat_;
  uint32_t n_clauses_sat_ = 0;
  std::vector<Lit> trail_;
};

bool verifies(const Formula &f, const Assignment &x) {
  for (const Clause &c : f.clauses()) {
    bool sat = false;
    for (Lit lit : c)
      sat = sat ||
            (x[static_cast<size_t>(lit_var(lit) - 1)] != 0) == lit_positive(lit);
    if (!sat)
      return false;
  }
  return true;
}

} // namespace

DpllResult dpll_sat(const Formula &f, uint64_t decision_budget) {
  Dpll solver(f, decision_budget);
  DpllResult result = solver.run();
  if (result.status == DpllStatus::satisfiable && !verifies(f, result.witness))
    throw std::logic_error("dpll produced a non-verifying witness");
  return result;
}

} // namespace docsat
