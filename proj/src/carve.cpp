#include "ipstab/carve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ipstab/error.hpp"

namespace ipstab {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

KCenterResult greedy_k_center(const MetricSpace& space, std::size_t k, std::size_t first) {
  const std::size_t n = space.size();
  if (k == 0) throw ContractError("k-center needs k >= 1");
  if (first >= n) throw ContractError("first center " + std::to_string(first) + " out of range");
  if (k > n) {
    throw DegenerateInputError("k = " + std::to_string(k) + " exceeds the number of points (" + std::to_string(n) + ")");
  }

  KCenterResult result;
  result.centers.push_back(first);
  std::vector<double> nearest(space.row(first).begin(), space.row(first).end());
  while (result.centers.size() < k) {
    std::size_t best = 0;
    for (std::size_t x = 1; x < n; ++x) {
      if (nearest[x] > nearest[best]) best = x;
    }
    if (nearest[best] == 0.0) {
      throw DegenerateInputError("duplicate points exhaust distinct centers: only " +
                                 std::to_string(result.centers.size()) + " distinct locations for k = " +
                                 std::to_string(k));
    }
    result.centers.push_back(best);
    const auto row = space.row(best);
    for (std::size_t x = 0; x < n; ++x) nearest[x] = std::min(nearest[x], row[x]);
  }

  result.r0 = kInf;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      result.r0 = std::min(result.r0, space.distance(result.centers[i], result.centers[j]));
    }
  }
  result.covering_radius = 0.0;
  for (double d : nearest) result.covering_radius = std::max(result.covering_radius, d);
  return result;
}

CarveResult ball_carving(const MetricSpace& space, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InputError("carving radius must be positive and finite");
  const std::size_t n = space.size();

  std::vector<std::size_t> ball(n);
  for (std::size_t x = 0; x < n; ++x) ball[x] = space.ball_size(x, r);

  CarveTrace trace;
  trace.r = r;
  std::vector<std::size_t> label(n, kUnassigned);
  std::vector<double> to_centers(n, kInf);
  std::vector<std::size_t> annulus;

  auto take = [&](std::size_t point, std::size_t cluster) {
    if (label[point] != kUnassigned) {
      throw std::logic_error("ball carving assigned point " + std::to_string(point) + " twice");
    }
    label[point] = cluster;
  };

  for (;;) {
    std::size_t q = kUnassigned;
    for (std::size_t x = 0; x < n; ++x) {
      if (to_centers[x] > 6.0 * r && (q == kUnassigned || ball[x] > ball[q])) q = x;
    }
    if (q == kUnassigned) break;

    const std::size_t cluster = trace.t++;
    const std::size_t s = ball[q];
    const auto row = space.row(q);

    annulus.clear();
    for (std::size_t y = 0; y < n; ++y) {
      if (row[y] > 2.0 * r && row[y] <= 3.0 * r) annulus.push_back(y);
    }
    const bool dense = annulus.size() >= s;
    if (dense) {
      for (std::size_t y = 0; y < n; ++y) {
        if (row[y] <= r) take(y, cluster);
      }
      for (std::size_t j = 0; j < s; ++j) take(annulus[j], cluster);
    } else {
      for (std::size_t y = 0; y < n; ++y) {
        if (row[y] <= 3.0 * r) take(y, cluster);
      }
    }

    trace.centers.push_back(q);
    trace.ball_counts.push_back(s);
    trace.dense.push_back(dense);
    for (std::size_t y = 0; y < n; ++y) to_centers[y] = std::min(to_centers[y], row[y]);
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] != kUnassigned) continue;
    const auto row = space.row(x);
    for (std::size_t i = 0; i < trace.t; ++i) {
      if (row[trace.centers[i]] <= 7.0 * r) {
        label[x] = i;
        break;
      }
    }
    if (label[x] == kUnassigned) {
      throw std::logic_error("ball carving left point " + std::to_string(x) + " unassigned");
    }
  }

  return CarveResult{Clustering(std::move(label), trace.t), std::move(trace)};
}

IpClusteringResult ip_clustering_detailed(const MetricSpace& space, std::size_t k, std::size_t first) {
  const std::size_t n = space.size();
  if (k == 1) {
    return IpClusteringResult{Clustering(std::vector<std::size_t>(n, 0), 1), greedy_k_center(space, 1, first), {}};
  }
  KCenterResult kc = greedy_k_center(space, k, first);
  CarveResult carved = ball_carving(space, kc.r0 / kCarveRadiusDivisor);

  std::vector<std::size_t> label(n);
  for (const auto& piece : carved.clustering.clusters()) {
    std::size_t target = 0;
    double target_dist = kInf;
    for (std::size_t i = 0; i < k; ++i) {
      const auto row = space.row(kc.centers[i]);
      double d = kInf;
      for (std::size_t y : piece) d = std::min(d, row[y]);
      if (d < target_dist) {
        target_dist = d;
        target = i;
      }
    }
    for (std::size_t y : piece) label[y] = target;
  }
  return IpClusteringResult{Clustering(std::move(label), k), std::move(kc), std::move(carved.trace)};
}

}  // namespace ipstab
