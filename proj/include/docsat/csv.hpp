#ifndef DOCSAT_CSV_HPP
#define DOCSAT_CSV_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace docsat {

// Result file schemas. All experiment output is plain CSV with fixed
// columns, '\n' line endings and shortest-round-trip float formatting, so
// identical runs produce byte-identical files.

struct TrialRow {
  std::string instance_id;
  std::string solver;
  double p_walk = 0;
  double r_doc = 0;
  uint64_t seed = 0;
  uint32_t trial = 0;
  bool solved = false;
  uint64_t flips_used = 0;
  uint32_t final_energy = 0;
  int64_t final_tlc = 0;

  bool operator==(const TrialRow &) const = default;
};

struct HistogramRow {
  std::string instance_id;
  std::string solver;
  uint32_t energy = 0;
  int32_t tlc = 0;
  uint64_t count = 0;

  bool operator==(const HistogramRow &) const = default;
};

struct CritRow {
  std::string instance_id;
  std::string solver;
  uint32_t energy = 0;
  double mean_crit = 0;
  uint64_t count = 0;

  bool operator==(const CritRow &) const = default;
};

struct RatesRow {
  std::string instance_id;
  std::string solver;
  uint64_t oversat_to_crit = 0;
  uint64_t unsat_to_crit = 0;
  uint64_t crit_destroyed = 0;
  uint64_t nonrandom_flips = 0;
  uint64_t random_flips = 0;

  bool operator==(const RatesRow &) const = default;
};

struct SummaryRow {
  int n_vars = 0;
  std::string solver;
  uint32_t n_instances = 0;
  double r_sol = 0;
  double p_avg = 0;
  double p_avg_stderr = 0;
  double p_avg_quintile = 0;
  double p_avg_quintile_stderr = 0;

  bool operator==(const SummaryRow &) const = default;
};

struct ManifestRow {
  std::string instance_id;
  int n_vars = 0;
  double alpha = 0;
  uint64_t seed = 0;
};

// Shortest decimal string that round-trips the value ("0.15", not
// "0.150000").
std::string format_double(double value);

void write_trials_csv(std::ostream &out, const std::vector<TrialRow> &rows);
void write_histogram_csv(std::ostream &out,
                         const std::vector<HistogramRow> &rows);
void write_crit_csv(std::ostream &out, const std::vector<CritRow> &rows);
void write_rates_csv(std::ostream &out, const std::vector<RatesRow> &rows);
void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);
void write_manifest_csv(std::ostream &out,
                        const std::vector<ManifestRow> &rows);

void write_csv_file(const std::string &path, const std::string &content);

// Minimal reader for the files written above: header + unquoted fields.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a named column; throws if absent.
  size_t col(const std::string &name) const;
};

CsvTable read_csv_file(const std::string &path);

} // namespace docsat

#endif
