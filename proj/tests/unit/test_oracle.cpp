#include "docsat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "brute.hpp"
#include "doctest.h"

using namespace docsat;

namespace {

Formula f1() {
  return Formula::build(3, {{{1, 2, 3}}, {{-1, -2, 3}}, {{1, -2, -3}}});
}

// all 8 polarity patterns over (1,2,3): unsatisfiable, min energy 1
Formula all_patterns() {
  std::vector<Clause> clauses;
  for (int mask = 0; mask < 8; ++mask)
    clauses.push_back({(mask & 1) ? 1 : -1, (mask & 2) ? 2 : -2,
                       (mask & 4) ? 3 : -3});
  return Formula::build(3, std::move(clauses));
}

bool contains_mask(const std::vector<uint32_t> &masks, uint32_t mask) {
  return std::find(masks.begin(), masks.end(), mask) != masks.end();
}

} // namespace

TEST_CASE("enumerate the known instance") {
  const OracleReport report = enumerate_assignments(f1());
  CHECK(report.satisfiable);
  CHECK(report.min_energy == 0);
  CHECK(report.solution_masks.size() == 5);
  CHECK(contains_mask(report.solution_masks, 0b010)); // (0,1,0)
  CHECK(contains_mask(report.solution_masks, 0b111)); // (1,1,1)
  // every solution verifies
  for (uint32_t mask : report.solution_masks)
    CHECK(brute::energy(f1(), decode_mask(mask, 3)) == 0);
  uint64_t total = 0;
  for (const auto &[e, hist] : report.tlc_by_energy)
    for (const auto &[tlc, count] : hist)
      total += count;
  CHECK(total == 8);
}

TEST_CASE("enumerate empty and unsatisfiable formulas") {
  const Formula empty = Formula::build(2, std::vector<Clause>{});
  const OracleReport r_empty = enumerate_assignments(empty);
  CHECK(r_empty.satisfiable);
  CHECK(r_empty.solution_masks.size() == 4);

  const OracleReport r_unsat = enumerate_assignments(all_patterns());
  CHECK_FALSE(r_unsat.satisfiable);
  CHECK(r_unsat.min_energy == 1);
  CHECK(r_unsat.solution_masks.empty());
}

TEST_CASE("enumerate rejects large formulas") {
  const Formula f = Formula::build(30, {{{1, 2, 3}}});
  CHECK_THROWS_AS(enumerate_assignments(f, 25), Error);
  try {
    enumerate_assignments(f, 25);
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::limit_exceeded);
  }
}

TEST_CASE("enumerate matches per-assignment evaluation") {
  Rng rng(505);
  for (int round = 0; round < 10; ++round) {
    const int n = 3 + static_cast<int>(rng.below(8)); // 3..10
    const Formula f = brute::random_formula(rng, n, static_cast<uint32_t>(4 * n));
    const OracleReport report = enumerate_assignments(f);
    std::map<uint32_t, std::map<int32_t, uint64_t>> expected;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Assignment x = decode_mask(mask, n);
      ++expected[brute::energy(f, x)][static_cast<int32_t>(brute::tlc(f, x))];
    }
    CHECK(report.tlc_by_energy == expected);
  }
}

TEST_CASE("enumerate matches SearchState quantities") {
  Rng rng(606);
  const Formula f = brute::random_formula(rng, 9, 38);
  const OracleReport report = enumerate_assignments(f);
  std::map<uint32_t, std::map<int32_t, uint64_t>> expected;
  for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
    SearchState s(f, decode_mask(mask, 9));
    ++expected[s.energy()][static_cast<int32_t>(s.tlc())];
  }
  CHECK(report.tlc_by_energy == expected);
}

TEST_CASE("dpll on known instances") {
  const DpllResult sat = dpll_sat(f1());
  CHECK(sat.status == DpllStatus::satisfiable);
  CHECK(brute::energy(f1(), sat.witness) == 0);

  const DpllResult unsat = dpll_sat(all_patterns());
  CHECK(unsat.status == DpllStatus::unsatisfiable);

  const Formula empty = Formula::build(0, std::vector<Clause>{});
  const DpllResult trivial = dpll_sat(empty);
  CHECK(trivial.status == DpllStatus::satisfiable);
  CHECK(trivial.witness.empty());
}

TEST_CASE("dpll budget yields unknown, never a wrong answer") {
  Rng rng(707);
  const Formula f = brute::random_formula(rng, 60, 258); // alpha = 4.3
  const DpllResult limited = dpll_sat(f, 0);
  CHECK(limited.status == DpllStatus::unknown);
  const DpllResult full = dpll_sat(f);
  CHECK(full.status != DpllStatus::unknown);
}

TEST_CASE("dpll agrees with enumeration on random formulas") {
  Rng rng(808);
  int n_sat = 0;
  for (int round = 0; round < 1000; ++round) {
    const int n = 5 + static_cast<int>(rng.below(12)); // 5..16
    const double alpha = 3.0 + rng.uniform() * 2.5;    // [3, 5.5)
    const uint32_t m = static_cast<uint32_t>(std::llround(alpha * n));
    const Formula f = brute::random_formula(rng, n, m);
    const OracleReport report = enumerate_assignments(f, 16);
    const DpllResult result = dpll_sat(f);
    REQUIRE(result.status != DpllStatus::unknown);
    REQUIRE((result.status == DpllStatus::satisfiable) == report.satisfiable);
    if (result.status == DpllStatus::satisfiable) {
      REQUIRE(brute::energy(f, result.witness) == 0);
      ++n_sat;
    }
  }
  // the ensemble straddles the phase transition: both outcomes occur
  CHECK(n_sat > 100);
  CHECK(n_sat < 900);
}
