#ifndef IPSTAB_BASELINES_HPP
#define IPSTAB_BASELINES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ipstab/clustering.hpp"
#include "ipstab/metric.hpp"

namespace ipstab {

inline constexpr std::size_t kDefaultLloydIterations = 300;

struct KMeansResult {
  Clustering clustering;
  PointSet centers;  // centroid of each final cluster
  std::vector<std::size_t> seeds;  // point indices picked by D^2 seeding
  // k-means objective after every assignment step; nonincreasing.
  std::vector<double> objective_trace;
  std::size_t iterations = 0;
  bool converged = false;
};

// k-means++ with a single initialization: D^2 seeding followed by Lloyd
// iterations until the assignment stops changing or max_iters is reached.
// A cluster that empties is reseeded at the point farthest from its own center.
KMeansResult kmeans_pp(const PointSet& points, std::size_t k, std::uint64_t seed,
                       std::size_t max_iters = kDefaultLloydIterations);
// Same, on a space built from coordinates; other spaces are rejected.
KMeansResult kmeans_pp(const MetricSpace& space, std::size_t k, std::uint64_t seed,
                       std::size_t max_iters = kDefaultLloydIterations);

// Independent uniform colors in [0, k) for n vertices. Colors may go unused.
std::vector<std::size_t> random_colors(std::size_t n, std::size_t k, std::uint64_t seed);

// Random k-coloring of a graph metric, as a clustering over the colors that
// actually occur (so k() may be smaller than the requested k).
Clustering random_coloring(const MetricSpace& space, std::size_t k, std::uint64_t seed);

struct ColorBalanceStats {
  std::vector<double> per_color_x;  // X_i: summed root distance of color i
  double total_x = 0.0;  // X
  std::size_t k = 0;
  std::size_t root = 0;

  // X/2 <= k X_i <= 2X for every color.
  bool balanced() const;
};

ColorBalanceStats color_balance(const MetricSpace& space, std::size_t root, const Clustering& clustering);
// Works from the root's distance row alone, so large graphs need no matrix.
ColorBalanceStats color_balance(std::span<const double> root_distances, std::size_t root,
                                std::span<const std::size_t> colors, std::size_t k);

}  // namespace ipstab

#endif  // IPSTAB_BASELINES_HPP
