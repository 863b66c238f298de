#ifndef IPSTAB_STABILITY_HPP
#define IPSTAB_STABILITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ipstab/clustering.hpp"
#include "ipstab/metric.hpp"

namespace ipstab {

// How a point scores a set of points: mean, nearest or farthest distance.
enum class Objective { Average, Minimum, Maximum };

const char* to_string(Objective objective);
// Accepts "avg"/"average", "min"/"minimum", "max"/"maximum".
std::optional<Objective> parse_objective(std::string_view name);

// Points with a violation above this are counted unstable.
inline constexpr double kUnstableThreshold = 1.0 + 1e-9;

// f(x, cluster). The cluster must be nonempty; x may or may not belong to it.
double f_value(const MetricSpace& space, Objective objective, std::size_t x, std::span<const std::size_t> cluster);

// Ratio f(x, C(x) \ {x}) / f(x, C') maximized over the other clusters C'.
//
// Zero when x is a singleton or k == 1. A zero denominator yields 0 when the
// numerator is also zero and +infinity otherwise.
double violation(const MetricSpace& space, const Clustering& clustering, std::size_t x, Objective objective);

struct StabilityReport {
  std::vector<double> vi;
  double max_vi = 0.0;
  double mean_vi = 0.0;
  std::size_t num_unstable = 0;
  Objective objective = Objective::Average;
};

// All per-point violations in O(n (n + k)).
StabilityReport stability_report(const MetricSpace& space, const Clustering& clustering, Objective objective);

struct CostReport {
  double avg_within_cost = 0.0;  // sum over clusters of the mean pairwise distance
  std::optional<double> k_center_cost;  // max distance from a point to its cluster's center
  double k_means_cost = 0.0;  // sum over clusters of (1/|C|) * sum over pairs of d^2
};

// Centers, when given, are point indices with centers[c] serving cluster c.
CostReport cost_report(const MetricSpace& space, const Clustering& clustering,
                       std::optional<std::span<const std::size_t>> centers = std::nullopt);

// k-center cost against free-standing center coordinates (k-means centroids).
// The space must carry coordinates.
double k_center_cost(const MetricSpace& space, const Clustering& clustering, const PointSet& centers);

}  // namespace ipstab

#endif  // IPSTAB_STABILITY_HPP
