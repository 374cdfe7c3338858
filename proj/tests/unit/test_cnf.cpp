#include "docsat/cnf.hpp"

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "doctest.h"

using namespace docsat;

namespace {

// N=3 instance used throughout: (1 v 2 v 3), (-1 v -2 v 3), (1 v -2 v -3).
Formula f1() {
  return Formula::build(3, {{{1, 2, 3}}, {{-1, -2, 3}}, {{1, -2, -3}}});
}

std::vector<uint32_t> sorted(std::vector<uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("build_formula computes occurrence counts") {
  const Formula f = f1();
  CHECK(f.num_vars() == 3);
  CHECK(f.num_clauses() == 3);
  CHECK(f.pos_count(1) == 2);
  CHECK(f.pos_count(2) == 1);
  CHECK(f.pos_count(3) == 2);
  CHECK(f.neg_count(1) == 1);
  CHECK(f.neg_count(2) == 2);
  CHECK(f.neg_count(3) == 1);
  // occurrence lists consistent with the clause list
  size_t total = 0;
  for (int var = 1; var <= 3; ++var)
    total += static_cast<size_t>(f.pos_count(var) + f.neg_count(var));
  CHECK(total == 3 * f.num_clauses());
}

TEST_CASE("build_formula on empty clause list") {
  const Formula f = Formula::build(1, std::vector<Clause>{});
  CHECK(f.num_clauses() == 0);
  CHECK(f.pos_count(1) == 0);
  CHECK(f.neg_count(1) == 0);
}

TEST_CASE("build_formula validation") {
  CHECK_THROWS_WITH_AS(Formula::build(2, {{{1, 1, 2}}}), doctest::Contains("RepeatedVariableInClause"), Error);
  CHECK_THROWS_AS(Formula::build(2, {{{1, 2, 3}}}), Error);
  CHECK_THROWS_AS(Formula::build(3, {{{1, 0, 2}}}), Error);
  try {
    Formula::build(2, {{{1, 2, 3}}});
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::out_of_range_variable);
  }
  // variable-arity entry point rejects non-ternary clauses
  try {
    Formula::from_lists(3, {{1, 2}});
    CHECK(false);
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::wrong_clause_arity);
  }
}

TEST_CASE("init_state on known assignments") {
  const Formula f = f1();
  {
    SearchState s(f, {1, 1, 1});
    CHECK(s.energy() == 0);
    CHECK(s.tlc() == 5);
    CHECK(s.clause_true_count(0) == 3);
    CHECK(s.clause_true_count(1) == 1);
    CHECK(s.clause_true_count(2) == 1);
  }
  {
    SearchState s(f, {0, 0, 0});
    CHECK(s.energy() == 1);
    CHECK(s.tlc() == 4);
    CHECK(sorted(s.unsat_clauses()) == std::vector<uint32_t>{0});
  }
  {
    const Formula empty = Formula::build(0, std::vector<Clause>{});
    SearchState s(empty, {});
    CHECK(s.energy() == 0);
    CHECK(s.tlc() == 0);
  }
  CHECK_THROWS_AS(SearchState(f, {0, 0}), Error);
}

TEST_CASE("flip matches recomputation") {
  const Formula f = f1();
  {
    SearchState s(f, {0, 0, 0});
    s.flip(1);
    CHECK(s.value(1));
    CHECK(s.energy() == 0);
    CHECK(s.tlc() == 5);
  }
  {
    SearchState s(f, {0, 0, 0});
    s.flip(2);
    CHECK(s.energy() == 0);
    CHECK(s.tlc() == 3);
  }
  SearchState s(f, {0, 0, 0});
  CHECK_THROWS_AS(s.flip(4), Error);
  CHECK_THROWS_AS(s.flip(0), Error);
}

TEST_CASE("flip is an involution") {
  Rng rng(7);
  for (int round = 0; round < 20; ++round) {
    const Formula f = brute::random_formula(rng, 10, 40);
    const Assignment x = brute::random_assignment(rng, 10);
    SearchState s(f, x);
    const int var = 1 + static_cast<int>(rng.below(10));
    const auto e0 = s.energy();
    const auto t0 = s.tlc();
    const int delta = s.tlc_delta(var);
    s.flip(var);
    CHECK(s.tlc_delta(var) == -delta);
    s.flip(var);
    CHECK(s.energy() == e0);
    CHECK(s.tlc() == t0);
    CHECK(s.assignment() == x);
  }
}

TEST_CASE("breakcount examples") {
  const Formula f = f1();
  {
    SearchState s(f, {0, 0, 0});
    CHECK(s.breakcount(1) == 0);
    CHECK(s.breakcount(2) == 0);
    CHECK(s.breakcount(3) == 0);
  }
  {
    SearchState s(f, {1, 1, 1});
    CHECK(s.breakcount(3) == 1); // clause 2 is critical through x3
    CHECK(s.breakcount(3) == brute::breakcount(f, {1, 1, 1}, 3));
  }
  {
    // variable with no occurrences
    const Formula g = Formula::build(4, {{{1, 2, 3}}});
    SearchState s(g, {1, 0, 0, 0});
    CHECK(s.breakcount(4) == 0);
    CHECK(s.makecount(4) == 0);
    CHECK(s.tlc_delta(4) == 0);
  }
}

TEST_CASE("makecount examples") {
  const Formula f = f1();
  {
    SearchState s(f, {0, 0, 0});
    CHECK(s.makecount(1) == 1);
    CHECK(s.makecount(2) == 1);
    CHECK(s.makecount(3) == 1);
  }
  {
    SearchState s(f, {0, 1, 0});
    REQUIRE(s.energy() == 0);
    CHECK(s.makecount(1) == 0);
    CHECK(s.makecount(2) == 0);
    CHECK(s.makecount(3) == 0);
  }
}

TEST_CASE("tlc_delta examples") {
  const Formula f = f1();
  SearchState s(f, {0, 0, 0});
  CHECK(s.tlc_delta(1) == 1);
  CHECK(s.tlc_delta(2) == -1);
  CHECK(s.tlc_delta(3) == 1);
  // balanced variable -> zero either way
  const Formula g = Formula::build(3, {{{1, 2, 3}}, {{-1, 2, 3}}});
  SearchState s0(g, {0, 0, 0});
  SearchState s1(g, {1, 0, 0});
  CHECK(s0.tlc_delta(1) == 0);
  CHECK(s1.tlc_delta(1) == 0);
}

TEST_CASE("critical_count examples") {
  const Formula f = f1();
  CHECK(SearchState(f, {1, 1, 1}).critical_count() == 2);
  CHECK(SearchState(f, {1, 0, 1}).critical_count() == 0);
  const Formula empty = Formula::build(2, std::vector<Clause>{});
  CHECK(SearchState(empty, {0, 0}).critical_count() == 0);
}

TEST_CASE("counts agree with brute force on random formulas") {
  Rng rng(99);
  for (int round = 0; round < 50; ++round) {
    const int n = 4 + static_cast<int>(rng.below(9)); // 4..12
    const uint32_t m = static_cast<uint32_t>(
        3 + rng.below(static_cast<uint64_t>(5 * n)));
    const Formula f = brute::random_formula(rng, n, m);
    const Assignment x = brute::random_assignment(rng, n);
    SearchState s(f, x);
    CHECK(s.energy() == brute::energy(f, x));
    CHECK(s.tlc() == brute::tlc(f, x));
    CHECK(s.critical_count() == brute::critical_count(f, x));
    for (int var = 1; var <= n; ++var) {
      CHECK(s.breakcount(var) == brute::breakcount(f, x, var));
      CHECK(s.makecount(var) == brute::makecount(f, x, var));
      CHECK(s.tlc_delta(var) == brute::tlc_delta(f, x, var));
    }
  }
}

TEST_CASE("incremental state equals recomputation after many flips") {
  Rng rng(1234);
  for (int round = 0; round < 5; ++round) {
    const int n = 6 + static_cast<int>(rng.below(7));
    const Formula f = brute::random_formula(rng, n, static_cast<uint32_t>(4 * n));
    SearchState s(f, brute::random_assignment(rng, n));
    for (int i = 0; i < 10000; ++i)
      s.flip(1 + static_cast<int>(rng.below(static_cast<uint64_t>(n))));
    SearchState fresh(f, s.assignment());
    CHECK(s.energy() == fresh.energy());
    CHECK(s.tlc() == fresh.tlc());
    CHECK(s.critical_count() == fresh.critical_count());
    for (uint32_t c = 0; c < f.num_clauses(); ++c)
      CHECK(s.clause_true_count(c) == fresh.clause_true_count(c));
    CHECK(sorted(s.unsat_clauses()) == sorted(fresh.unsat_clauses()));
    CHECK(sorted(s.unsat_clauses()) == brute::unsat_set(f, s.assignment()));
  }
}

TEST_CASE("energy zero iff all clauses satisfied") {
  Rng rng(55);
  const Formula f = brute::random_formula(rng, 8, 30);
  for (int round = 0; round < 200; ++round) {
    const Assignment x = brute::random_assignment(rng, 8);
    SearchState s(f, x);
    bool all_sat = true;
    for (const auto &c : f.clauses())
      all_sat = all_sat && brute::clause_true_count(c, x) > 0;
    CHECK((s.energy() == 0) == all_sat);
  }
}

TEST_CASE("tlc invariant against occurrence counts") {
  Rng rng(321);
  const Formula f = brute::random_formula(rng, 9, 36);
  for (int round = 0; round < 50; ++round) {
    const Assignment x = brute::random_assignment(rng, 9);
    SearchState s(f, x);
    int64_t expected = 0;
    for (int var = 1; var <= 9; ++var)
      expected += x[static_cast<size_t>(var - 1)] ? f.pos_count(var)
                                                  : f.neg_count(var);
    CHECK(s.tlc() == expected);
  }
}

TEST_CASE("tlc_extremes on the known instance") {
  const Formula f = f1();
  const TlcExtremes ext = f.tlc_extremes();
  CHECK(ext.max_assignment == Assignment{1, 0, 1});
  CHECK(ext.min_assignment == Assignment{0, 1, 0});
  CHECK(SearchState(f, ext.max_assignment).tlc() == 6);
  CHECK(SearchState(f, ext.min_assignment).tlc() == 3);
}

TEST_CASE("tlc_extremes all-positive formula") {
  const Formula f = Formula::build(4, {{{1, 2, 3}}, {{2, 3, 4}}});
  const TlcExtremes ext = f.tlc_extremes();
  CHECK(ext.max_assignment == Assignment{1, 1, 1, 1});
  CHECK(ext.min_assignment == Assignment{0, 0, 0, 0});
}

TEST_CASE("tlc_extremes bound holds exhaustively for small formulas") {
  Rng rng(77);
  for (int round = 0; round < 10; ++round) {
    const int n = 3 + static_cast<int>(rng.below(8)); // 3..10
    const Formula f = brute::random_formula(rng, n, static_cast<uint32_t>(4 * n));
    const TlcExtremes ext = f.tlc_extremes();
    const int64_t lo = brute::tlc(f, ext.min_assignment);
    const int64_t hi = brute::tlc(f, ext.max_assignment);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      Assignment x(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k)
        x[static_cast<size_t>(k)] = (mask >> k) & 1;
      const int64_t t = brute::tlc(f, x);
      CHECK(t >= lo);
      CHECK(t <= hi);
    }
  }
}

TEST_CASE("tlc_extremes bound holds on random samples") {
  Rng rng(88);
  const Formula f = brute::random_formula(rng, 30, 120);
  const TlcExtremes ext = f.tlc_extremes();
  const int64_t lo = brute::tlc(f, ext.min_assignment);
  const int64_t hi = brute::tlc(f, ext.max_assignment);
  for (int round = 0; round < 100; ++round) {
    const int64_t t = brute::tlc(f, brute::random_assignment(rng, 30));
    CHECK(t >= lo);
    CHECK(t <= hi);
  }
}
