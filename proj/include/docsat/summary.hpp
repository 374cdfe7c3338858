#ifndef DOCSAT_SUMMARY_HPP
#define DOCSAT_SUMMARY_HPP

#include <string>
#include <utility>
#include <vector>

#include "docsat/csv.hpp"

namespace docsat {

// Indices partitioned by per-instance success probability:
// hard p < hard_below, easy p > easy_above, the rest other. Both
// comparisons are strict, so boundary values land in `other`.
struct Classification {
  std::vector<size_t> hard;
  std::vector<size_t> easy;
  std::vector<size_t> other;
};

Classification classify_instances(const std::vector<double> &p,
                                  double hard_below = 0.01,
                                  double easy_above = 0.9);

struct InstanceOutcome {
  std::string instance_id;
  int n_vars = 0;
  std::string solver;
  double p = 0;        // solved trials / executed trials
  bool solved = false; // any trial solved
};

// Per (n_vars, solver): solution ratio, mean success probability with its
// standard error, and the same pair over the hardest-quintile (the
// ceil(n/5) instances with the smallest p for that solver).
std::vector<SummaryRow>
aggregate_summary(const std::vector<InstanceOutcome> &outcomes);

struct FitResult {
  double fit_b = 0;     // b in p(N) = prefactor * (1+b)^-N
  double prefactor = 0;
  double residual = 0;  // rms residual of log p
  size_t n_points = 0;
};

// Least squares of log p against N: log p = c - N*log(1+b). Requires at
// least two points with distinct N and strictly positive p.
FitResult fit_scaling(const std::vector<std::pair<double, double>> &points);

} // namespace docsat

#endif
