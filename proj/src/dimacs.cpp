#include "docsat/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace docsat {

namespace {

bool parse_int(const std::string &token, long long &out) {
  const char *first = token.data();
  const char *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

} // namespace

DimacsDocument parse_dimacs_document(std::istream &in, ParseMode mode) {
  DimacsDocument doc;
  bool have_header = false;
  std::vector<Lit> current;
  std::string line;
  size_t lineno = 0;
  bool done = false;

  while (!done && std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (!line.empty() && line[0] == 'c') {
      doc.comments.push_back(line.size() > 1 && line[1] == ' ' ? line.substr(2)
                                                               : line.substr(1));
      continue;
    }
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      if (token == "%" && mode == ParseMode::lenient) {
        done = true; // SATLIB end marker
        break;
      }
      if (token == "p") {
        if (have_header)
          throw Error(ErrorCode::malformed_header,
                      "duplicate header at line " + std::to_string(lineno));
        std::string fmt, rest;
        long long n = -1, m = -1;
        std::string n_tok, m_tok;
        if (!(tokens >> fmt >> n_tok >> m_tok) || fmt != "cnf" ||
            !parse_int(n_tok, n) || !parse_int(m_tok, m) || n < 0 || m < 0 ||
            (tokens >> rest))
          throw Error(ErrorCode::malformed_header,
                      "line " + std::to_string(lineno));
        doc.n_vars = static_cast<int>(n);
        doc.n_clauses_declared = static_cast<uint32_t>(m);
        have_header = true;
        continue;
      }
      if (!have_header)
        throw Error(ErrorCode::missing_header,
                    "clause data before header at line " +
                        std::to_string(lineno));
      long long value = 0;
      if (!parse_int(token, value))
        throw Error(ErrorCode::literal_out_of_range,
                    "token '" + token + "' at line " + std::to_string(lineno));
      if (value == 0) {
        if (current.size() != 3)
          throw Error(ErrorCode::non_ternary_clause,
                      "clause with " + std::to_string(current.size()) +
                          " literals at line " + std::to_string(lineno));
        doc.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
        continue;
      }
      if (value < -doc.n_vars || value > doc.n_vars)
        throw Error(ErrorCode::literal_out_of_range,
                    "literal " + token + " at line " + std::to_string(lineno));
      current.push_back(static_cast<Lit>(value));
    }
  }

  if (!have_header)
    throw Error(ErrorCode::missing_header, "no 'p cnf' line");
  if (!current.empty())
    throw Error(ErrorCode::unterminated_clause,
                "end of input inside a clause");
  if (doc.clauses.size() != doc.n_clauses_declared &&
      mode == ParseMode::strict)
    throw Error(ErrorCode::clause_count_mismatch,
                "header declares " + std::to_string(doc.n_clauses_declared) +
                    " clauses, found " + std::to_string(doc.clauses.size()));
  return doc;
}

Formula parse_dimacs(std::istream &in, ParseMode mode) {
  DimacsDocument doc = parse_dimacs_document(in, mode);
  return Formula::build(doc.n_vars, std::move(doc.clauses));
}

Formula parse_dimacs(const std::string &text, ParseMode mode) {
  std::istringstream in(text);
  return parse_dimacs(in, mode);
}

Formula read_dimacs_file(const std::string &path, ParseMode mode) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::io_error, "cannot open " + path);
  return parse_dimacs(in, mode);
}

std::string write_dimacs(const Formula &f) {
  std::string out = "p cnf " + std::to_string(f.num_vars()) + " " +
                    std::to_string(f.num_clauses()) + "\n";
  for (const Clause &c : f.clauses()) {
    out += std::to_string(c[0]);
    out += ' ';
    out += std::to_string(c[1]);
    out += ' ';
    out += std::to_string(c[2]);
    out += " 0\n";
  }
  return out;
}

void write_dimacs_file(const Formula &f, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::io_error, "cannot open " + path + " for writing");
  out << write_dimacs(f);
  if (!out)
    throw Error(ErrorCode::io_error, "short write to " + path);
}

} // namespace docsat
