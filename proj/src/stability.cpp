#include "ipstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/violation_kernel.hpp"
#include "ipstab/error.hpp"

namespace ipstab {

using detail::Accumulator;

const char* to_string(Objective objective) {
  switch (objective) {
    case Objective::Average:
      return "avg";
    case Objective::Minimum:
      return "min";
    case Objective::Maximum:
      return "max";
  }
  return "unknown";
}

std::optional<Objective> parse_objective(std::string_view name) {
  if (name == "avg" || name == "average") return Objective::Average;
  if (name == "min" || name == "minimum") return Objective::Minimum;
  if (name == "max" || name == "maximum") return Objective::Maximum;
  return std::nullopt;
}

double f_value(const MetricSpace& space, Objective objective, std::size_t x, std::span<const std::size_t> cluster) {
  if (cluster.empty()) throw ContractError("objective evaluated on an empty cluster");
  if (x >= space.size()) throw ContractError("point " + std::to_string(x) + " out of range");
  Accumulator acc;
  const auto row = space.row(x);
  for (std::size_t y : cluster) acc.add(row[y]);
  return acc.value(objective);
}

double violation(const MetricSpace& space, const Clustering& clustering, std::size_t x, Objective objective) {
  if (clustering.size() != space.size()) throw ContractError("clustering and space sizes differ");
  if (x >= space.size()) throw ContractError("point " + std::to_string(x) + " out of range");
  std::vector<Accumulator> acc;
  return detail::point_violation(space.row(x), clustering.assignment(), clustering.k(), x, objective, acc);
}

StabilityReport stability_report(const MetricSpace& space, const Clustering& clustering, Objective objective) {
  if (clustering.size() != space.size()) throw ContractError("clustering and space sizes differ");
  const std::size_t n = space.size();
  StabilityReport report;
  report.objective = objective;
  report.vi.resize(n);
  std::vector<Accumulator> acc;
  double total = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    const double v = detail::point_violation(space.row(x), clustering.assignment(), clustering.k(), x, objective, acc);
    report.vi[x] = v;
    report.max_vi = std::max(report.max_vi, v);
    total += v;
    if (v > kUnstableThreshold) ++report.num_unstable;
  }
  report.mean_vi = total / static_cast<double>(n);
  return report;
}

CostReport cost_report(const MetricSpace& space, const Clustering& clustering,
                       std::optional<std::span<const std::size_t>> centers) {
  if (clustering.size() != space.size()) throw ContractError("clustering and space sizes differ");
  CostReport report;
  for (const auto& members : clustering.clusters()) {
    const std::size_t m = members.size();
    if (m < 2) continue;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      const auto row = space.row(members[a]);
      for (std::size_t b = a + 1; b < m; ++b) {
        const double d = row[members[b]];
        sum += d;
        sum_sq += d * d;
      }
    }
    const double pairs = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
    report.avg_within_cost += sum / pairs;
    report.k_means_cost += sum_sq / static_cast<double>(m);
  }
  if (centers) {
    if (centers->size() != clustering.k()) {
      throw InputError("expected " + std::to_string(clustering.k()) + " centers, got " +
                       std::to_string(centers->size()));
    }
    double worst = 0.0;
    for (std::size_t x = 0; x < clustering.size(); ++x) {
      const std::size_t c = (*centers)[clustering.cluster_of(x)];
      if (c >= space.size()) throw InputError("center index " + std::to_string(c) + " out of range");
      worst = std::max(worst, space.distance(x, c));
    }
    report.k_center_cost = worst;
  }
  return report;
}

double k_center_cost(const MetricSpace& space, const Clustering& clustering, const PointSet& centers) {
  if (!space.has_coordinates()) throw InputError("k-center cost against centroids requires coordinates");
  if (centers.size() != clustering.k()) {
    throw InputError("expected " + std::to_string(clustering.k()) + " centers, got " + std::to_string(centers.size()));
  }
  const PointSet& points = space.coordinates();
  double worst = 0.0;
  for (std::size_t x = 0; x < points.size(); ++x) {
    const Point& c = centers[clustering.cluster_of(x)];
    if (c.size() != points[x].size()) throw InputError("center dimension mismatch");
    double acc = 0.0;
    for (std::size_t d = 0; d < c.size(); ++d) acc += (points[x][d] - c[d]) * (points[x][d] - c[d]);
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

}  // namespace ipstab
