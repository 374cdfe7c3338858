#include "docsat/stats.hpp"

#include <algorithm>

namespace docsat {

void StatsAccumulator::merge(const StatsAccumulator &other) {
  for (const auto &[key, count] : other.histogram_)
    histogram_[key] += count;
  for (const auto &[energy, cell] : other.crit_by_energy_) {
    CritCell &mine = crit_by_energy_[energy];
    mine.sum_crit += cell.sum_crit;
    mine.states += cell.states;
  }
  oversat_to_crit_ += other.oversat_to_crit_;
  unsat_to_crit_ += other.unsat_to_crit_;
  crit_destroyed_ += other.crit_destroyed_;
  nonrandom_flips_ += other.nonrandom_flips_;
  random_flips_ += other.random_flips_;
}

std::vector<HistogramRow>
StatsAccumulator::histogram_rows(const std::string &instance_id,
                                 const std::string &solver) const {
  std::vector<HistogramRow> rows;
  rows.reserve(histogram_.size());
  for (const auto &[key, count] : histogram_) {
    HistogramRow row;
    row.instance_id = instance_id;
    row.solver = solver;
    row.energy = static_cast<uint32_t>(key >> 32);
    row.tlc = static_cast<int32_t>(key & 0xffffffffu);
    row.count = count;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
    return a.energy != b.energy ? a.energy < b.energy : a.tlc < b.tlc;
  });
  return rows;
}

std::vector<CritRow>
StatsAccumulator::crit_rows(const std::string &instance_id,
                            const std::string &solver) const {
  std::vector<CritRow> rows;
  rows.reserve(crit_by_energy_.size());
  for (const auto &[energy, cell] : crit_by_energy_) {
    CritRow row;
    row.instance_id = instance_id;
    row.solver = solver;
    row.energy = energy;
    row.mean_crit = static_cast<double>(cell.sum_crit) /
                    static_cast<double>(cell.states);
    row.count = cell.states;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto &a, const auto &b) { return a.energy < b.energy; });
  return rows;
}

RatesRow StatsAccumulator::rates_row(const std::string &instance_id,
                                     const std::string &solver) const {
  RatesRow row;
  row.instance_id = instance_id;
  row.solver = solver;
  row.oversat_to_crit = oversat_to_crit_;
  row.unsat_to_crit = unsat_to_crit_;
  row.crit_destroyed = crit_destroyed_;
  row.nonrandom_flips = nonrandom_flips_;
  row.random_flips = random_flips_;
  return row;
}

uint64_t StatsAccumulator::states_at(uint32_t energy) const {
  auto it = crit_by_energy_.find(energy);
  return it == crit_by_energy_.end() ? 0 : it->second.states;
}

double StatsAccumulator::mean_tlc_at(uint32_t energy) const {
  double sum = 0;
  uint64_t n = 0;
  for (const auto &[key, count] : histogram_) {
    if (static_cast<uint32_t>(key >> 32) != energy)
      continue;
    sum += static_cast<double>(static_cast<int32_t>(key & 0xffffffffu)) *
           static_cast<double>(count);
    n += count;
  }
  if (n == 0)
    throw Error(ErrorCode::empty_input,
                "no states recorded at energy " + std::to_string(energy));
  return sum / static_cast<double>(n);
}

double StatsAccumulator::mean_crit_at(uint32_t energy) const {
  auto it = crit_by_energy_.find(energy);
  if (it == crit_by_energy_.end() || it->second.states == 0)
    throw Error(ErrorCode::empty_input,
                "no states recorded at energy " + std::to_string(energy));
  return static_cast<double>(it->second.sum_crit) /
         static_cast<double>(it->second.states);
}

RateReport rate_report(const std::vector<RatesRow> &rows) {
  if (rows.size() < 2)
    throw Error(ErrorCode::empty_input,
                "rate comparison needs at least two solvers");
  RateReport report;
  for (const auto &row : rows) {
    if (row.nonrandom_flips == 0)
      throw Error(ErrorCode::no_nonrandom_flips, "solver " + row.solver);
    RateEntry entry;
    entry.solver = row.solver;
    entry.gamma_c = static_cast<double>(row.oversat_to_crit) /
                    static_cast<double>(row.nonrandom_flips);
    entry.combined_rate =
        static_cast<double>(row.oversat_to_crit + row.unsat_to_crit) /
        static_cast<double>(row.nonrandom_flips);
    report.entries.push_back(std::move(entry));
  }
  for (size_t i = 0; i < report.entries.size(); ++i)
    for (size_t j = 0; j < report.entries.size(); ++j) {
      if (i == j)
        continue;
      RatePair pair;
      pair.numerator = report.entries[i].solver;
      pair.denominator = report.entries[j].solver;
      pair.gamma_ratio = report.entries[i].gamma_c / report.entries[j].gamma_c;
      pair.combined_ratio =
          report.entries[i].combined_rate / report.entries[j].combined_rate;
      report.ratios.push_back(std::move(pair));
    }
  return report;
}

} // namespace docsat
