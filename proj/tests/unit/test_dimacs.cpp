#include "docsat/dimacs.hpp"

#include <sstream>

#include "brute.hpp"
#include "docsat/csv.hpp"
#include "doctest.h"

using namespace docsat;

namespace {

const char *kF1Text = "p cnf 3 3\n1 2 3 0\n-1 -2 3 0\n1 -2 -3 0\n";

ErrorCode parse_error(const std::string &text,
                      ParseMode mode = ParseMode::strict) {
  try {
    parse_dimacs(text, mode);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected a parse error for: " << text);
  return ErrorCode::io_error;
}

} // namespace

TEST_CASE("parse known instance") {
  const Formula f = parse_dimacs(kF1Text);
  CHECK(f.num_vars() == 3);
  CHECK(f.num_clauses() == 3);
  CHECK(f.clause(1) == Clause{-1, -2, 3});
  CHECK(f.pos_count(1) == 2);
  CHECK(f.neg_count(2) == 2);
}

TEST_CASE("comments and empty formulas") {
  const Formula f = parse_dimacs("c comment\np cnf 1 0\n");
  CHECK(f.num_vars() == 1);
  CHECK(f.num_clauses() == 0);

  std::istringstream in("c one\nc two\np cnf 2 0\n");
  const DimacsDocument doc = parse_dimacs_document(in);
  CHECK(doc.comments == std::vector<std::string>{"one", "two"});
  CHECK(doc.n_clauses_declared == 0);
}

TEST_CASE("clauses may span lines and share them") {
  const Formula f = parse_dimacs("p cnf 3 2\n1 2\n3 0 -1 -2 3 0\n");
  CHECK(f.num_clauses() == 2);
  CHECK(f.clause(0) == Clause{1, 2, 3});
  CHECK(f.clause(1) == Clause{-1, -2, 3});
}

TEST_CASE("malformed corpus maps to documented errors") {
  CHECK(parse_error("") == ErrorCode::missing_header);
  CHECK(parse_error("1 2 3 0\n") == ErrorCode::missing_header);
  CHECK(parse_error("p cnf x 3\n") == ErrorCode::malformed_header);
  CHECK(parse_error("p dnf 3 3\n") == ErrorCode::malformed_header);
  CHECK(parse_error("p cnf 3\n") == ErrorCode::malformed_header);
  CHECK(parse_error("p cnf 3 3 9\n") == ErrorCode::malformed_header);
  CHECK(parse_error("p cnf -3 1\n") == ErrorCode::malformed_header);
  CHECK(parse_error("p cnf 3 1\np cnf 3 1\n1 2 3 0\n") ==
        ErrorCode::malformed_header);
  CHECK(parse_error("p cnf 2 1\n1 2 3 0\n") == ErrorCode::literal_out_of_range);
  CHECK(parse_error("p cnf 3 1\n1 junk 3 0\n") ==
        ErrorCode::literal_out_of_range);
  CHECK(parse_error("p cnf 3 1\n1 2 0\n") == ErrorCode::non_ternary_clause);
  CHECK(parse_error("p cnf 4 1\n1 2 3 4 0\n") == ErrorCode::non_ternary_clause);
  CHECK(parse_error("p cnf 3 1\n1 2 3\n") == ErrorCode::unterminated_clause);
  CHECK(parse_error("p cnf 3 2\n1 2 3 0\n") ==
        ErrorCode::clause_count_mismatch);
  CHECK(parse_error("p cnf 3 1\n1 2 3 0\n-1 -2 3 0\n") ==
        ErrorCode::clause_count_mismatch);
  // repeated variables are rejected at formula construction
  CHECK(parse_error("p cnf 2 1\n1 1 2 0\n") ==
        ErrorCode::repeated_variable_in_clause);
}

TEST_CASE("lenient mode recounts and accepts the %% end marker") {
  const Formula f = parse_dimacs("p cnf 3 2\n1 2 3 0\n", ParseMode::lenient);
  CHECK(f.num_clauses() == 1);
  const Formula g =
      parse_dimacs("p cnf 3 1\n1 2 3 0\n%\n0\n", ParseMode::lenient);
  CHECK(g.num_clauses() == 1);
  CHECK(parse_error("p cnf 3 1\n1 2 3 0\n%\n0\n", ParseMode::strict) ==
        ErrorCode::literal_out_of_range);
  // range and termination stay enforced in lenient mode
  CHECK(parse_error("p cnf 2 1\n1 2 3 0\n", ParseMode::lenient) ==
        ErrorCode::literal_out_of_range);
  CHECK(parse_error("p cnf 3 1\n1 2 3\n", ParseMode::lenient) ==
        ErrorCode::unterminated_clause);
}

TEST_CASE("canonical writer output") {
  const Formula f = parse_dimacs(kF1Text);
  CHECK(write_dimacs(f) == kF1Text);
  const Formula empty = Formula::build(1, std::vector<Clause>{});
  CHECK(write_dimacs(empty) == "p cnf 1 0\n");
}

TEST_CASE("round trip identity on random formulas") {
  Rng rng(2024);
  for (int round = 0; round < 1000; ++round) {
    const int n = 3 + static_cast<int>(rng.below(20));
    const uint32_t m = static_cast<uint32_t>(rng.below(60));
    const Formula f = brute::random_formula(rng, n, m);
    const std::string text = write_dimacs(f);
    const Formula g = parse_dimacs(text);
    REQUIRE(write_dimacs(g) == text);
    REQUIRE(g.num_vars() == f.num_vars());
  }
}

TEST_CASE("csv writers emit the documented schemas") {
  {
    std::ostringstream out;
    write_trials_csv(out, {});
    CHECK(out.str() == "instance_id,solver,p_walk,r_doc,seed,trial,solved,"
                       "flips_used,final_energy,final_tlc\n");
  }
  {
    TrialRow row;
    row.instance_id = "w200v0";
    row.solver = "walksat_p0.5";
    row.p_walk = 0.5;
    row.r_doc = 0;
    row.seed = 12345;
    row.trial = 7;
    row.solved = true;
    row.flips_used = 901;
    row.final_energy = 0;
    row.final_tlc = 1234;
    std::ostringstream out;
    write_trials_csv(out, {row});
    CHECK(out.str().find("w200v0,walksat_p0.5,0.5,0,12345,7,1,901,0,1234\n") !=
          std::string::npos);
  }
  {
    std::ostringstream out;
    write_summary_csv(out, {});
    CHECK(out.str() == "n_vars,solver,n_instances,r_sol,p_avg,p_avg_stderr,"
                       "p_avg_quintile,p_avg_quintile_stderr\n");
  }
  {
    std::ostringstream out;
    write_histogram_csv(out, {});
    CHECK(out.str() == "instance_id,solver,energy,tlc,count\n");
  }
  {
    std::ostringstream out;
    write_crit_csv(out, {});
    CHECK(out.str() == "instance_id,solver,energy,mean_crit,count\n");
  }
  {
    std::ostringstream out;
    write_rates_csv(out, {});
    CHECK(out.str() == "instance_id,solver,oversat_to_crit,unsat_to_crit,"
                       "crit_destroyed,nonrandom_flips,random_flips\n");
  }
}

TEST_CASE("format_double is shortest round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.15) == "0.15");
  CHECK(format_double(0) == "0");
  CHECK(format_double(1) == "1");
  CHECK(format_double(4.27) == "4.27");
}
