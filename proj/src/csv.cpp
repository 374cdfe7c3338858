#include "docsat/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "docsat/errors.hpp"

namespace docsat {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

void write_trials_csv(std::ostream &out, const std::vector<TrialRow> &rows) {
  out << "instance_id,solver,p_walk,r_doc,seed,trial,solved,flips_used,"
         "final_energy,final_tlc\n";
  for (const auto &r : rows)
    out << r.instance_id << ',' << r.solver << ',' << format_double(r.p_walk)
        << ',' << format_double(r.r_doc) << ',' << r.seed << ',' << r.trial
        << ',' << (r.solved ? 1 : 0) << ',' << r.flips_used << ','
        << r.final_energy << ',' << r.final_tlc << '\n';
}

void write_histogram_csv(std::ostream &out,
                         const std::vector<HistogramRow> &rows) {
  out << "instance_id,solver,energy,tlc,count\n";
  for (const auto &r : rows)
    out << r.instance_id << ',' << r.solver << ',' << r.energy << ',' << r.tlc
        << ',' << r.count << '\n';
}

void write_crit_csv(std::ostream &out, const std::vector<CritRow> &rows) {
  out << "instance_id,solver,energy,mean_crit,count\n";
  for (const auto &r : rows)
    out << r.instance_id << ',' << r.solver << ',' << r.energy << ','
        << format_double(r.mean_crit) << ',' << r.count << '\n';
}

void write_rates_csv(std::ostream &out, const std::vector<RatesRow> &rows) {
  out << "instance_id,solver,oversat_to_crit,unsat_to_crit,crit_destroyed,"
         "nonrandom_flips,random_flips\n";
  for (const auto &r : rows)
    out << r.instance_id << ',' << r.solver << ',' << r.oversat_to_crit << ','
        << r.unsat_to_crit << ',' << r.crit_destroyed << ','
        << r.nonrandom_flips << ',' << r.random_flips << '\n';
}

void write_summary_csv(std::ostream &out,
                       const std::vector<SummaryRow> &rows) {
  out << "n_vars,solver,n_instances,r_sol,p_avg,p_avg_stderr,p_avg_quintile,"
         "p_avg_quintile_stderr\n";
  for (const auto &r : rows)
    out << r.n_vars << ',' << r.solver << ',' << r.n_instances << ','
        << format_double(r.r_sol) << ',' << format_double(r.p_avg) << ','
        << format_double(r.p_avg_stderr) << ','
        << format_double(r.p_avg_quintile) << ','
        << format_double(r.p_avg_quintile_stderr) << '\n';
}

void write_manifest_csv(std::ostream &out,
                        const std::vector<ManifestRow> &rows) {
  out << "instance_id,n_vars,alpha,seed\n";
  for (const auto &r : rows)
    out << r.instance_id << ',' << r.n_vars << ',' << format_double(r.alpha)
        << ',' << r.seed << '\n';
}

void write_csv_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::io_error, "cannot open " + path + " for writing");
  out << content;
  if (!out)
    throw Error(ErrorCode::io_error, "short write to " + path);
}

size_t CsvTable::col(const std::string &name) const {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name)
      return i;
  throw Error(ErrorCode::empty_input, "no column '" + name + "'");
}

CsvTable read_csv_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::io_error, "cannot open " + path);
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
      fields.push_back(field);
    if (!line.empty() && line.back() == ',')
      fields.emplace_back();
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      table.rows.push_back(std::move(fields));
    }
  }
  if (first)
    throw Error(ErrorCode::empty_input, path + " is empty");
  return table;
}

} // namespace docsat
