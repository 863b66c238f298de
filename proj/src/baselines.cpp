#include "ipstab/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ipstab/error.hpp"
#include "ipstab/random.hpp"

namespace ipstab {

namespace {

double squared_distance(const Point& a, const Point& b) {
  double acc = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    acc += diff * diff;
  }
  return acc;
}

std::vector<std::size_t> d2_seeding(const PointSet& points, std::size_t k, Rng& rng) {
  const std::size_t n = points.size();
  std::vector<std::size_t> seeds{static_cast<std::size_t>(rng.below(n))};
  std::vector<double> d2(n);
  for (std::size_t x = 0; x < n; ++x) d2[x] = squared_distance(points[x], points[seeds[0]]);

  while (seeds.size() < k) {
    double total = 0.0;
    for (double v : d2) total += v;
    std::size_t pick = n;
    if (total > 0.0) {
      const double target = rng.uniform01() * total;
      double running = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        if (d2[x] == 0.0) continue;
        running += d2[x];
        pick = x;
        if (running > target) break;
      }
    } else {
      // Every point coincides with a seed already; duplicates are all that is left.
      pick = static_cast<std::size_t>(rng.below(n));
    }
    seeds.push_back(pick);
    for (std::size_t x = 0; x < n; ++x) d2[x] = std::min(d2[x], squared_distance(points[x], points[pick]));
  }
  return seeds;
}

}  // namespace

KMeansResult kmeans_pp(const PointSet& points, std::size_t k, std::uint64_t seed, std::size_t max_iters) {
  const std::size_t n = points.size();
  if (n == 0) throw InputError("k-means++ needs at least one point");
  const std::size_t dim = points.front().size();
  for (const Point& p : points) {
    if (p.size() != dim || dim == 0) throw InputError("k-means++ points must share a positive dimension");
  }
  if (k == 0 || k > n) {
    throw InputError("k-means++ needs 1 <= k <= n (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
  }

  Rng rng(seed);
  KMeansResult result{Clustering(std::vector<std::size_t>(n, 0), 1), {}, {}, {}, 0, false};
  result.seeds = d2_seeding(points, k, rng);
  PointSet centers;
  for (std::size_t s : result.seeds) centers.push_back(points[s]);

  std::vector<std::size_t> labels(n), previous;
  std::vector<std::size_t> counts(k);
  const std::size_t iteration_cap = std::max<std::size_t>(max_iters, 1);
  for (std::size_t iter = 0; iter < iteration_cap; ++iter) {
    std::vector<double> own_d2(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t best = 0;
      double best_d2 = squared_distance(points[x], centers[0]);
      for (std::size_t c = 1; c < k; ++c) {
        const double v = squared_distance(points[x], centers[c]);
        if (v < best_d2) {
          best_d2 = v;
          best = c;
        }
      }
      labels[x] = best;
      own_d2[x] = best_d2;
    }

    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t l : labels) ++counts[l];
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      std::size_t far = n;
      for (std::size_t x = 0; x < n; ++x) {
        if (counts[labels[x]] < 2) continue;
        if (far == n || own_d2[x] > own_d2[far]) far = x;
      }
      --counts[labels[far]];
      labels[far] = c;
      counts[c] = 1;
      own_d2[far] = 0.0;
      centers[c] = points[far];
    }

    double objective = 0.0;
    for (double v : own_d2) objective += v;
    result.objective_trace.push_back(objective);
    result.iterations = iter + 1;

    if (labels == previous) {
      result.converged = true;
      break;
    }
    previous = labels;

    for (auto& c : centers) std::fill(c.begin(), c.end(), 0.0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t d = 0; d < dim; ++d) centers[labels[x]][d] += points[x][d];
    }
    for (std::size_t c = 0; c < k; ++c) {
      for (double& v : centers[c]) v /= static_cast<double>(counts[c]);
    }
  }

  if (!result.converged) {
    for (auto& c : centers) std::fill(c.begin(), c.end(), 0.0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t d = 0; d < dim; ++d) centers[labels[x]][d] += points[x][d];
    }
    for (std::size_t c = 0; c < k; ++c) {
      for (double& v : centers[c]) v /= static_cast<double>(counts[c]);
    }
  }
  result.centers = std::move(centers);
  result.clustering = Clustering(std::move(labels), k);
  return result;
}

KMeansResult kmeans_pp(const MetricSpace& space, std::size_t k, std::uint64_t seed, std::size_t max_iters) {
  if (!space.has_coordinates()) throw InputError("k-means++ requires coordinates");
  return kmeans_pp(space.coordinates(), k, seed, max_iters);
}

std::vector<std::size_t> random_colors(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw InputError("random coloring needs k >= 1");
  Rng rng(seed);
  std::vector<std::size_t> colors(n);
  for (auto& c : colors) c = static_cast<std::size_t>(rng.below(k));
  return colors;
}

Clustering random_coloring(const MetricSpace& space, std::size_t k, std::uint64_t seed) {
  if (space.kind() != MetricKind::Graph) throw InputError("random coloring requires a graph metric");
  if (k == 0 || k > space.size()) {
    throw InputError("random coloring needs 1 <= k <= n (k = " + std::to_string(k) + ")");
  }
  const auto colors = random_colors(space.size(), k, seed);
  return Clustering::compact(colors);
}

bool ColorBalanceStats::balanced() const {
  const double kk = static_cast<double>(k);
  return std::all_of(per_color_x.begin(), per_color_x.end(),
                     [&](double xi) { return total_x / 2.0 <= kk * xi && kk * xi <= 2.0 * total_x; });
}

ColorBalanceStats color_balance(std::span<const double> root_distances, std::size_t root,
                                std::span<const std::size_t> colors, std::size_t k) {
  if (colors.size() != root_distances.size()) throw ContractError("coloring and distance row sizes differ");
  if (root >= colors.size()) throw ContractError("root " + std::to_string(root) + " out of range");
  ColorBalanceStats stats;
  stats.k = k;
  stats.root = root;
  stats.per_color_x.assign(k, 0.0);
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] >= k) throw ContractError("color " + std::to_string(colors[v]) + " outside [0, k)");
    stats.per_color_x[colors[v]] += root_distances[v];
    stats.total_x += root_distances[v];
  }
  return stats;
}

ColorBalanceStats color_balance(const MetricSpace& space, std::size_t root, const Clustering& clustering) {
  if (clustering.size() != space.size()) throw ContractError("clustering and space sizes differ");
  if (root >= space.size()) throw ContractError("root " + std::to_string(root) + " out of range");
  return color_balance(space.row(root), root, clustering.assignment(), clustering.k());
}

}  // namespace ipstab
