#ifndef DOCSAT_DIMACS_HPP
#define DOCSAT_DIMACS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "docsat/cnf.hpp"

namespace docsat {

// Strict mode rejects clause-count mismatches; lenient mode re-counts and
// also tolerates the SATLIB-style trailing '%' end marker. Everything else
// (header, termination, 3-literal clauses, ranges) is enforced in both.
enum class ParseMode { strict, lenient };

struct DimacsDocument {
  int n_vars = 0;
  uint32_t n_clauses_declared = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> comments; // comment lines, 'c' prefix stripped
};

DimacsDocument parse_dimacs_document(std::istream &in,
                                     ParseMode mode = ParseMode::strict);

Formula parse_dimacs(std::istream &in, ParseMode mode = ParseMode::strict);
Formula parse_dimacs(const std::string &text,
                     ParseMode mode = ParseMode::strict);
Formula read_dimacs_file(const std::string &path,
                         ParseMode mode = ParseMode::strict);

// Canonical form: header line, one clause per line, literals space
// separated with a trailing " 0". parse_dimacs(write_dimacs(f)) == f.
std::string write_dimacs(const Formula &f);
void write_dimacs_file(const Formula &f, const std::string &path);

} // namespace docsat

#endif
