#ifndef IPSTAB_MINMAX_HPP
#define IPSTAB_MINMAX_HPP

#include <cstddef>

#include "ipstab/carve.hpp"
#include "ipstab/clustering.hpp"
#include "ipstab/metric.hpp"

namespace ipstab {

// Exact Min-IP stable k-clustering: Kruskal over all pairs (ties broken by the
// index pair), stopped once k components remain. Components are labeled by
// their smallest member. Accepts any 1 <= k <= n, duplicates included.
Clustering min_ip_clustering(const MetricSpace& space, std::size_t k);

struct MaxIpResult {
  Clustering clustering;  // cluster i is the Voronoi cell of centers[i]
  KCenterResult kcenter;
};

// 3-approximate Max-IP stable k-clustering: greedy k-center, then every point
// joins its nearest center (earliest-chosen center on ties).
MaxIpResult max_ip_clustering_detailed(const MetricSpace& space, std::size_t k, std::size_t first = 0);

inline Clustering max_ip_clustering(const MetricSpace& space, std::size_t k, std::size_t first = 0) {
  return max_ip_clustering_detailed(space, k, first).clustering;
}

}  // namespace ipstab

#endif  // IPSTAB_MINMAX_HPP
