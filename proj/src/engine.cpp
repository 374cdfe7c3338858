#include "docsat/engine.hpp"

#include <algorithm>

#include "docsat/csv.hpp"

namespace docsat {

const char *heuristic_kind_name(HeuristicKind kind) {
  switch (kind) {
  case HeuristicKind::walksat: return "walksat";
  case HeuristicKind::docsat: return "docsat";
  case HeuristicKind::gwsat: return "gwsat";
  case HeuristicKind::tabu: return "tabu";
  case HeuristicKind::novelty: return "novelty";
  }
  return "?";
}

HeuristicKind heuristic_kind_from_name(const std::string &name) {
  if (name == "walksat") return HeuristicKind::walksat;
  if (name == "docsat") return HeuristicKind::docsat;
  if (name == "gwsat") return HeuristicKind::gwsat;
  if (name == "tabu") return HeuristicKind::tabu;
  if (name == "novelty") return HeuristicKind::novelty;
  throw Error(ErrorCode::invalid_config, "unknown heuristic '" + name + "'");
}

std::string HeuristicConfig::label() const {
  if (!name.empty())
    return name;
  std::string out = heuristic_kind_name(kind);
  out += "_p" + format_double(p_walk);
  if (kind == HeuristicKind::docsat)
    out += "_r" + format_double(r_doc);
  if (kind == HeuristicKind::tabu)
    out += "_l" + std::to_string(tabu_len);
  if (kind == HeuristicKind::novelty)
    out += "_n" + format_double(p_novelty);
  return out;
}

void HeuristicConfig::validate() const {
  if (!(p_walk >= 0.0 && p_walk <= 1.0))
    throw Error(ErrorCode::invalid_config, "p_walk must be in [0,1]");
  if (!(r_doc >= 0.0))
    throw Error(ErrorCode::invalid_config, "r_doc must be >= 0");
  if (tabu_len < 0)
    throw Error(ErrorCode::invalid_config, "tabu_len must be >= 0");
  if (!(p_novelty >= 0.0 && p_novelty <= 1.0))
    throw Error(ErrorCode::invalid_config, "p_novelty must be in [0,1]");
}

void TrialConfig::validate() const {
  if (n_trials < 1)
    throw Error(ErrorCode::invalid_config, "n_trials must be >= 1");
}

namespace {

void require_unsat(const SearchState &s, uint32_t clause) {
  if (clause >= s.formula().num_clauses() || !s.clause_unsat(clause))
    throw Error(ErrorCode::clause_not_unsat,
                "clause " + std::to_string(clause) +
                    " is not currently unsatisfied");
}

// Shared scored selection. Scores the three variables of an unsatisfied
// clause with b + r_doc*T, draws the walk coin, and takes the uniform
// branch only when every score is strictly positive (a zero or negative
// score is a free or TLC-lowering move and preempts the random walk).
// Minimal-score selection breaks ties uniformly; the rng is consumed for
// tie-breaking only when more than one variable attains the minimum.
Pick scored_pick(const SearchState &s, const int *vars, int n_vars, Rng &rng,
                 double p_walk, double r_doc, bool negate_doc_term) {
  double score[3];
  bool all_positive = true;
  for (int i = 0; i < n_vars; ++i) {
    double value = static_cast<double>(s.breakcount(vars[i]));
    if (r_doc != 0.0) {
      const double t = static_cast<double>(s.tlc_delta(vars[i]));
      value += r_doc * (negate_doc_term ? -t : t);
    }
    score[i] = value;
    all_positive = all_positive && value > 0.0;
  }
  const double u = rng.uniform();
  if (all_positive && u < p_walk)
    return {vars[rng.below(static_cast<uint64_t>(n_vars))], true};

  double best = score[0];
  for (int i = 1; i < n_vars; ++i)
    best = std::min(best, score[i]);
  int tied[3];
  int n_tied = 0;
  for (int i = 0; i < n_vars; ++i)
    if (score[i] == best)
      tied[n_tied++] = vars[i];
  if (n_tied == 1)
    return {tied[0], false};
  return {tied[rng.below(static_cast<uint64_t>(n_tied))], false};
}

void clause_vars(const SearchState &s, uint32_t clause, int *vars) {
  const Clause &c = s.formula().clause(clause);
  for (int i = 0; i < 3; ++i)
    vars[i] = lit_var(c[i]);
}

} // namespace

Pick pick_var_walksat(const SearchState &s, uint32_t clause, Rng &rng,
                      double p_walk) {
  return pick_var_docsat(s, clause, rng, p_walk, 0.0, false);
}

Pick pick_var_docsat(const SearchState &s, uint32_t clause, Rng &rng,
                     double p_walk, double r_doc, bool negate_doc_term) {
  require_unsat(s, clause);
  int vars[3];
  clause_vars(s, clause, vars);
  return scored_pick(s, vars, 3, rng, p_walk, r_doc, negate_doc_term);
}

Pick pick_var_gwsat(const SearchState &s, uint32_t clause, Rng &rng,
                    double p_walk) {
  require_unsat(s, clause);
  int vars[3];
  clause_vars(s, clause, vars);
  const double u = rng.uniform();
  if (u < p_walk)
    return {vars[rng.below(3)], true};
  int score[3];
  for (int i = 0; i < 3; ++i)
    score[i] = s.breakcount(vars[i]) - s.makecount(vars[i]);
  const int best = std::min({score[0], score[1], score[2]});
  int tied[3];
  int n_tied = 0;
  for (int i = 0; i < 3; ++i)
    if (score[i] == best)
      tied[n_tied++] = vars[i];
  if (n_tied == 1)
    return {tied[0], false};
  return {tied[rng.below(static_cast<uint64_t>(n_tied))], false};
}

Pick pick_var_tabu(const SearchState &s, uint32_t clause, Rng &rng,
                   double p_walk, const FlipHistory &history) {
  require_unsat(s, clause);
  int vars[3];
  clause_vars(s, clause, vars);
  int candidates[3];
  int n_cand = 0;
  for (int i = 0; i < 3; ++i)
    if (!history.tabu(vars[i]))
      candidates[n_cand++] = vars[i];
  if (n_cand == 0)
    return {vars[rng.below(3)], true}; // every variable tabu: uniform fallback
  return scored_pick(s, candidates, n_cand, rng, p_walk, 0.0, false);
}

Pick pick_var_novelty(const SearchState &s, uint32_t clause, Rng &rng,
                      double p_novelty, const FlipHistory &history) {
  require_unsat(s, clause);
  int vars[3];
  clause_vars(s, clause, vars);
  int score[3];
  for (int i = 0; i < 3; ++i)
    score[i] = s.breakcount(vars[i]) - s.makecount(vars[i]);
  // best and second best by (score, clause position)
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (score[i] < score[best])
      best = i;
  int second = -1;
  for (int i = 0; i < 3; ++i) {
    if (i == best)
      continue;
    if (second < 0 || score[i] < score[second])
      second = i;
  }
  // most recently flipped variable of the clause
  int youngest = 0;
  for (int i = 1; i < 3; ++i)
    if (history.last_flip(vars[i]) > history.last_flip(vars[youngest]))
      youngest = i;
  if (best != youngest)
    return {vars[best], false};
  const double u = rng.uniform();
  return {vars[u < p_novelty ? second : best], false};
}

Assignment random_assignment(int n_vars, Rng &rng) {
  Assignment x(static_cast<size_t>(n_vars));
  for (auto &bit : x)
    bit = rng.coin() ? 1 : 0;
  return x;
}

namespace {

bool verify_solution(const Formula &f, const Assignment &x) {
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

TrialResult run_trial(const Formula &f, const HeuristicConfig &h,
                      uint64_t max_flips, Rng &rng, Instrumentation *hooks) {
  h.validate();
  SearchState s(f, random_assignment(f.num_vars(), rng));
  FlipHistory history(h.tabu_len, f.num_vars());
  const bool track_history =
      h.kind == HeuristicKind::tabu || h.kind == HeuristicKind::novelty;

  if (hooks)
    hooks->on_state(s.energy(), s.tlc(), s.critical_count());

  uint64_t flips = 0;
  while (s.energy() > 0 && flips < max_flips) {
    const uint32_t clause =
        s.unsat_clauses()[rng.below(s.unsat_clauses().size())];
    Pick pick;
    switch (h.kind) {
    case HeuristicKind::walksat:
      pick = pick_var_walksat(s, clause, rng, h.p_walk);
      break;
    case HeuristicKind::docsat:
      pick = pick_var_docsat(s, clause, rng, h.p_walk, h.r_doc,
                             h.negate_doc_term);
      break;
    case HeuristicKind::gwsat:
      pick = pick_var_gwsat(s, clause, rng, h.p_walk);
      break;
    case HeuristicKind::tabu:
      pick = pick_var_tabu(s, clause, rng, h.p_walk, history);
      break;
    case HeuristicKind::novelty:
      pick = pick_var_novelty(s, clause, rng, h.p_novelty, history);
      break;
    }
    const FlipTransitions transitions = s.flip(pick.var);
    ++flips;
    if (track_history)
      history.push(pick.var);
    if (hooks) {
      hooks->on_flip({flips, clause, pick.var, pick.random_step, transitions});
      hooks->on_state(s.energy(), s.tlc(), s.critical_count());
    }
  }

  TrialResult result;
  result.flips_used = flips;
  result.final_energy = s.energy();
  result.final_tlc = s.tlc();
  if (s.energy() == 0) {
    if (!verify_solution(f, s.assignment()))
      throw std::logic_error("state energy 0 but solution does not verify");
    result.solved = true;
    result.solution = s.assignment();
  }
  return result;
}

RestartResult run_restarts(const Formula &f, const HeuristicConfig &h,
                           const TrialConfig &t, uint64_t master_seed,
                           Instrumentation *hooks) {
  h.validate();
  t.validate();
  RestartResult out;
  for (uint32_t trial = 0; trial < t.n_trials; ++trial) {
    const uint64_t seed = mix_seed(master_seed, trial);
    Rng rng(seed);
    if (hooks)
      hooks->on_trial_start(trial, seed);
    TrialResult result = run_trial(f, h, t.max_flips, rng, hooks);
    result.seed = seed;
    const bool solved = result.solved;
    out.trials.push_back(std::move(result));
    ++out.trials_executed;
    if (solved) {
      ++out.n_solved;
      if (t.stop_on_solution)
        break;
    }
  }
  out.p_hat = static_cast<double>(out.n_solved) /
              static_cast<double>(out.trials_executed);
  return out;
}

} // namespace docsat
