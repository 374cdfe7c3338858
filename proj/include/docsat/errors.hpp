#ifndef DOCSAT_ERRORS_HPP
#define DOCSAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace docsat {

// Every failure the library reports carries one of these codes so callers
// (and tests) can dispatch on the class of error instead of parsing text.
enum class ErrorCode {
  // cnf / construction
  out_of_range_variable,
  repeated_variable_in_clause,
  wrong_clause_arity,
  length_mismatch,
  clause_not_unsat,
  // dimacs
  missing_header,
  malformed_header,
  literal_out_of_range,
  unterminated_clause,
  clause_count_mismatch,
  non_ternary_clause,
  // generator
  invalid_config,
  oracle_limit_exceeded,
  resample_budget_exhausted,
  // oracle
  limit_exceeded,
  // statistics / fitting
  insufficient_points,
  nonpositive_probability,
  empty_input,
  no_nonrandom_flips,
  // io
  io_error,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace docsat

#endif
