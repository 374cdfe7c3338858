#include "docsat/generator.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "docsat/oracle.hpp"

namespace docsat {

namespace {

constexpr int kMaxPlantedResamples = 512; // per clause; P(fail) = (1/8)^512
constexpr int kMaxFilterRounds = 256;

uint64_t clause_key(const Clause &c) {
  // order-independent identity of a clause as a literal set
  Clause sorted_lits = c;
  std::sort(sorted_lits.begin(), sorted_lits.end());
  uint64_t key = 0;
  for (Lit lit : sorted_lits)
    key = mix64(key ^ static_cast<uint64_t>(static_cast<int64_t>(lit)));
  return key;
}

bool satisfied_by(const Clause &c, const Assignment &x) {
  for (Lit lit : c)
    if ((x[static_cast<size_t>(lit_var(lit) - 1)] != 0) == lit_positive(lit))
      return true;
  return false;
}

Formula generate_once(const GenConfig &cfg, Rng &rng,
                      const Assignment &planted) {
  const uint32_t m = cfg.num_clauses();
  const uint64_t n = static_cast<uint64_t>(cfg.n_vars);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  std::unordered_set<uint64_t> seen;
  uint64_t duplicate_budget = std::max<uint64_t>(1000, 10 * uint64_t{m});

  while (clauses.size() < m) {
    int vars[3];
    vars[0] = 1 + static_cast<int>(rng.below(n));
    do {
      vars[1] = 1 + static_cast<int>(rng.below(n));
    } while (vars[1] == vars[0]);
    do {
      vars[2] = 1 + static_cast<int>(rng.below(n));
    } while (vars[2] == vars[0] || vars[2] == vars[1]);

    Clause c;
    if (cfg.planted_balanced) {
      // one or two satisfying literals, equal odds, position uniform
      const int n_true = rng.coin() ? 1 : 2;
      const uint32_t pick = static_cast<uint32_t>(rng.below(3));
      for (int i = 0; i < 3; ++i) {
        const bool plant_val =
            planted[static_cast<size_t>(vars[i] - 1)] != 0;
        const bool lit_true =
            n_true == 1 ? static_cast<uint32_t>(i) == pick
                        : static_cast<uint32_t>(i) != pick;
        c[i] = (lit_true == plant_val) ? vars[i] : -vars[i];
      }
    } else if (cfg.planted) {
      int attempts = 0;
      do {
        if (++attempts > kMaxPlantedResamples)
          throw Error(ErrorCode::resample_budget_exhausted,
                      "planted polarity resampling");
        for (int i = 0; i < 3; ++i)
          c[i] = rng.coin() ? vars[i] : -vars[i];
      } while (!satisfied_by(c, planted));
    } else {
      for (int i = 0; i < 3; ++i)
        c[i] = rng.coin() ? vars[i] : -vars[i];
    }

    if (cfg.forbid_duplicate_clauses) {
      if (!seen.insert(clause_key(c)).second) {
        if (duplicate_budget-- == 0)
          throw Error(ErrorCode::resample_budget_exhausted,
                      "duplicate clause resampling");
        continue;
      }
    }
    clauses.push_back(c);
  }
  return Formula::build(cfg.n_vars, std::move(clauses));
}

} // namespace

uint32_t GenConfig::num_clauses() const {
  return static_cast<uint32_t>(std::llround(alpha * n_vars));
}

void GenConfig::validate() const {
  if (n_vars < 1)
    throw Error(ErrorCode::invalid_config, "n_vars must be >= 1");
  if (!(alpha > 0))
    throw Error(ErrorCode::invalid_config, "alpha must be > 0");
  if (n_vars < 3 && num_clauses() > 0)
    throw Error(ErrorCode::invalid_config,
                "3 distinct variables per clause need n_vars >= 3");
  if (planted && planted_balanced)
    throw Error(ErrorCode::invalid_config,
                "planted and planted_balanced are mutually exclusive");
  if (filter_satisfiable && n_vars > kFilterVarLimit)
    throw Error(ErrorCode::oracle_limit_exceeded,
                "filter_satisfiable supports at most " +
                    std::to_string(kFilterVarLimit) + " variables");
}

Formula generate(const GenConfig &cfg, Assignment &planted_out) {
  cfg.validate();
  Rng rng(cfg.seed);
  Assignment planted;
  if (cfg.planted || cfg.planted_balanced) {
    planted.resize(static_cast<size_t>(cfg.n_vars));
    for (auto &bit : planted)
      bit = rng.coin() ? 1 : 0;
  }
  planted_out = planted;

  if (!cfg.filter_satisfiable)
    return generate_once(cfg, rng, planted);

  for (int round = 0; round < kMaxFilterRounds; ++round) {
    Formula f = generate_once(cfg, rng, planted);
    if (dpll_sat(f).status == DpllStatus::satisfiable)
      return f;
    // UNSAT and budget-exceeded formulas are both rejected: the filter
    // only emits instances certified satisfiable.
  }
  throw Error(ErrorCode::resample_budget_exhausted,
              "no satisfiable formula after " +
                  std::to_string(kMaxFilterRounds) + " rounds");
}

Formula generate(const GenConfig &cfg) {
  Assignment ignored;
  return generate(cfg, ignored);
}

std::vector<SuiteInstance> generate_suite(const std::vector<int> &n_list,
                                          double alpha, int n_instances,
                                          uint64_t master_seed,
                                          const GenConfig &flags) {
  if (n_instances < 0)
    throw Error(ErrorCode::invalid_config, "n_instances must be >= 0");
  std::vector<SuiteInstance> suite;
  suite.reserve(n_list.size() * static_cast<size_t>(n_instances));
  for (int n : n_list) {
    const uint64_t n_seed = mix_seed(master_seed, static_cast<uint64_t>(n));
    for (int index = 0; index < n_instances; ++index) {
      GenConfig cfg = flags;
      cfg.n_vars = n;
      cfg.alpha = alpha;
      cfg.seed = mix_seed(n_seed, static_cast<uint64_t>(index));
      SuiteInstance inst;
      inst.instance_id = "w" + std::to_string(n) + "v" + std::to_string(index);
      inst.n_vars = n;
      inst.seed = cfg.seed;
      inst.formula = generate(cfg);
      suite.push_back(std::move(inst));
    }
  }
  return suite;
}

} // namespace docsat
