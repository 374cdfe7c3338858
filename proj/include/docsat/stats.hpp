#ifndef DOCSAT_STATS_HPP
#define DOCSAT_STATS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "docsat/csv.hpp"
#include "docsat/engine.hpp"

namespace docsat {

// Mergeable per-run statistics, fed through the engine's instrumentation
// hooks. merge() is associative and commutative (plain counter addition),
// so trials can be sharded arbitrarily and recombined.
//
// Transition tallies follow the rate definition Gamma_c = oversat->crit
// per non-random flip: the three transition counters accumulate over
// heuristic (non-random) flips only, while random flips are counted
// separately.
class StatsAccumulator : public Instrumentation {
public:
  bool record_histogram = false;
  bool record_crit = false;
  bool record_rates = false;

  struct CritCell {
    uint64_t sum_crit = 0;
    uint64_t states = 0;
  };

  void on_state(uint32_t energy, int64_t tlc, uint32_t critical) override {
    if (record_histogram)
      ++histogram_[(static_cast<uint64_t>(energy) << 32) |
                   static_cast<uint32_t>(tlc)];
    if (record_crit) {
      CritCell &cell = crit_by_energy_[energy];
      cell.sum_crit += critical;
      ++cell.states;
    }
  }

  void on_flip(const FlipInfo &info) override {
    if (!record_rates)
      return;
    if (info.random_step) {
      ++random_flips_;
      return;
    }
    ++nonrandom_flips_;
    oversat_to_crit_ += info.transitions.oversat_to_crit;
    unsat_to_crit_ += info.transitions.unsat_to_crit;
    crit_destroyed_ += info.transitions.crit_destroyed();
  }

  void merge(const StatsAccumulator &other);

  // Rows for the CSV writers, sorted by (energy, tlc) for determinism.
  std::vector<HistogramRow> histogram_rows(const std::string &instance_id,
                                           const std::string &solver) const;
  std::vector<CritRow> crit_rows(const std::string &instance_id,
                                 const std::string &solver) const;
  RatesRow rates_row(const std::string &instance_id,
                     const std::string &solver) const;

  // Raw access for in-process consumers.
  const std::unordered_map<uint64_t, uint64_t> &histogram() const {
    return histogram_;
  }
  const std::unordered_map<uint32_t, CritCell> &crit_by_energy() const {
    return crit_by_energy_;
  }
  uint64_t states_at(uint32_t energy) const;
  // Mean TLC over recorded states with the given energy; throws EmptyInput
  // when none were recorded.
  double mean_tlc_at(uint32_t energy) const;
  // Mean critical-clause count at the given energy.
  double mean_crit_at(uint32_t energy) const;

  uint64_t oversat_to_crit() const { return oversat_to_crit_; }
  uint64_t unsat_to_crit() const { return unsat_to_crit_; }
  uint64_t crit_destroyed() const { return crit_destroyed_; }
  uint64_t nonrandom_flips() const { return nonrandom_flips_; }
  uint64_t random_flips() const { return random_flips_; }

private:
  std::unordered_map<uint64_t, uint64_t> histogram_; // (E<<32|TLC) -> count
  std::unordered_map<uint32_t, CritCell> crit_by_energy_;
  uint64_t oversat_to_crit_ = 0;
  uint64_t unsat_to_crit_ = 0;
  uint64_t crit_destroyed_ = 0;
  uint64_t nonrandom_flips_ = 0;
  uint64_t random_flips_ = 0;
};

// Critical-clause generation rates of one solver on one instance.
struct RateEntry {
  std::string solver;
  double gamma_c = 0;       // oversat->crit per non-random flip
  double combined_rate = 0; // (oversat->crit + unsat->crit) per non-random flip
};

struct RatePair {
  std::string numerator;
  std::string denominator;
  double gamma_ratio = 0;
  double combined_ratio = 0;
};

struct RateReport {
  std::vector<RateEntry> entries;
  std::vector<RatePair> ratios; // all ordered pairs (i, j), i != j
};

// Compares solvers run on the same instance. Requires at least two rows
// and a nonzero non-random flip count in each.
RateReport rate_report(const std::vector<RatesRow> &rows);

} // namespace docsat

#endif
