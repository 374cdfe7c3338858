#include "docsat/summary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "docsat/errors.hpp"

namespace docsat {

Classification classify_instances(const std::vector<double> &p,
                                  double hard_below, double easy_above) {
  Classification out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < hard_below)
      out.hard.push_back(i);
    else if (p[i] > easy_above)
      out.easy.push_back(i);
    else
      out.other.push_back(i);
  }
  return out;
}

namespace {

struct MeanStderr {
  double mean = 0;
  double stderr_ = 0;
};

MeanStderr mean_stderr(const std::vector<double> &values) {
  MeanStderr out;
  const size_t n = values.size();
  if (n == 0)
    return out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(n);
  if (n < 2)
    return out;
  double ss = 0;
  for (double v : values)
    ss += (v - out.mean) * (v - out.mean);
  const double sample_sd = std::sqrt(ss / static_cast<double>(n - 1));
  out.stderr_ = sample_sd / std::sqrt(static_cast<double>(n));
  return out;
}

} // namespace

std::vector<SummaryRow>
aggregate_summary(const std::vector<InstanceOutcome> &outcomes) {
  if (outcomes.empty())
    throw Error(ErrorCode::empty_input, "no instance outcomes");

  std::map<std::pair<int, std::string>, std::vector<const InstanceOutcome *>>
      groups;
  for (const auto &outcome : outcomes)
    groups[{outcome.n_vars, outcome.solver}].push_back(&outcome);

  std::vector<SummaryRow> rows;
  for (const auto &[key, group] : groups) {
    SummaryRow row;
    row.n_vars = key.first;
    row.solver = key.second;
    row.n_instances = static_cast<uint32_t>(group.size());

    uint32_t solved = 0;
    std::vector<double> p_values;
    p_values.reserve(group.size());
    for (const auto *outcome : group) {
      solved += outcome->solved ? 1 : 0;
      p_values.push_back(outcome->p);
    }
    row.r_sol = static_cast<double>(solved) / static_cast<double>(group.size());

    const MeanStderr overall = mean_stderr(p_values);
    row.p_avg = overall.mean;
    row.p_avg_stderr = overall.stderr_;

    // hardest quintile: the ceil(n/5) smallest p, ties by input order
    const size_t q = (p_values.size() + 4) / 5;
    std::vector<size_t> order(p_values.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return p_values[a] < p_values[b];
    });
    std::vector<double> quintile;
    quintile.reserve(q);
    for (size_t i = 0; i < q; ++i)
      quintile.push_back(p_values[order[i]]);
    const MeanStderr hard = mean_stderr(quintile);
    row.p_avg_quintile = hard.mean;
    row.p_avg_quintile_stderr = hard.stderr_;

    rows.push_back(std::move(row));
  }
  return rows;
}

FitResult fit_scaling(const std::vector<std::pair<double, double>> &points) {
  if (points.size() < 2)
    throw Error(ErrorCode::insufficient_points,
                "scaling fit needs at least two points");
  for (const auto &[n, p] : points)
    if (!(p > 0))
      throw Error(ErrorCode::nonpositive_probability,
                  "p = " + format_double(p) + " at N = " + format_double(n));

  double mean_x = 0, mean_y = 0;
  for (const auto &[n, p] : points) {
    mean_x += n;
    mean_y += std::log(p);
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());

  double sxx = 0, sxy = 0;
  for (const auto &[n, p] : points) {
    const double dx = n - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(p) - mean_y);
  }
  if (sxx == 0)
    throw Error(ErrorCode::insufficient_points,
                "scaling fit needs at least two distinct N");

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;

  FitResult fit;
  fit.n_points = points.size();
  fit.fit_b = std::exp(-slope) - 1.0;
  fit.prefactor = std::exp(intercept);
  double ss = 0;
  for (const auto &[n, p] : points) {
    const double r = std::log(p) - (intercept + slope * n);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(points.size()));
  return fit;
}

} // namespace docsat
