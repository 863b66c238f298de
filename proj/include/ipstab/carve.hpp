#ifndef IPSTAB_CARVE_HPP
#define IPSTAB_CARVE_HPP

#include <cstddef>
#include <vector>

#include "ipstab/clustering.hpp"
#include "ipstab/metric.hpp"

namespace ipstab {

struct KCenterResult {
  // c_1..c_k in selection order; centers[0] is the caller's `first`.
  std::vector<std::size_t> centers;
  // Minimum pairwise distance among the centers; +infinity when k == 1.
  double r0 = 0.0;
  // Maximum over points of the distance to the nearest center.
  double covering_radius = 0.0;
};

// Gonzalez farthest-point traversal. Each new center maximizes the distance to
// the centers chosen so far; ties go to the lowest index. Throws
// DegenerateInputError when the points have fewer than k distinct locations.
KCenterResult greedy_k_center(const MetricSpace& space, std::size_t k, std::size_t first = 0);

struct CarveTrace {
  std::vector<std::size_t> centers;  // q_1..q_t
  std::vector<std::size_t> ball_counts;  // s_i = |B(q_i, r)|
  std::vector<bool> dense;  // true when |A_i| >= s_i (ball plus s_i annulus points)
  std::size_t t = 0;
  double r = 0.0;
};

struct CarveResult {
  Clustering clustering;  // cluster i belongs to carving center q_i
  CarveTrace trace;
};

// Ball carving at radius r > 0.
//
// Centers are picked greedily among points farther than 6r from every chosen
// center, maximizing |B(x, r)| (lowest index on ties). With
// A_i = {x : 2r < d(x, q_i) <= 3r}, a center whose annulus holds at least s_i
// points takes B(q_i, r) plus the s_i lowest-index annulus points; otherwise it
// takes all of B(q_i, 3r). Leftover points join the earliest center within 7r.
//
// Every carved cluster has diameter at most 14r, and every point's average
// distance to a cluster it does not belong to is at least r/4.
CarveResult ball_carving(const MetricSpace& space, double r);

struct IpClusteringResult {
  Clustering clustering;  // cluster i contains greedy center c_i
  KCenterResult kcenter;
  CarveTrace trace;  // empty when k == 1
};

// O(1)-approximate IP-stable k-clustering: greedy k-center, ball carving at
// r0 / 15, then each carved cluster D merges into the greedy center c_i
// minimizing d(c_i, D). For k == 1 the whole set is returned without carving.
IpClusteringResult ip_clustering_detailed(const MetricSpace& space, std::size_t k, std::size_t first = 0);

inline Clustering ip_clustering(const MetricSpace& space, std::size_t k, std::size_t first = 0) {
  return ip_clustering_detailed(space, k, first).clustering;
}

// Carving radius as a fraction of r0.
inline constexpr double kCarveRadiusDivisor = 15.0;

}  // namespace ipstab

#endif  // IPSTAB_CARVE_HPP
