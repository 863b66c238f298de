#ifndef IPSTAB_TESTS_SUPPORT_HPP
#define IPSTAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "ipstab/clustering.hpp"
#include "ipstab/metric.hpp"

namespace ipstab::testing {

inline MetricSpace line(std::initializer_list<double> xs) {
  PointSet points;
  for (double x : xs) points.push_back({x});
  return MetricSpace::from_points(points);
}

// Clusters as sorted member lists, sorted by first member.
inline std::vector<std::vector<std::size_t>> groups(const Clustering& c) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < c.k(); ++i) {
    const auto m = c.members(i);
    out.emplace_back(m.begin(), m.end());
    std::sort(out.back().begin(), out.back().end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Groups = std::vector<std::vector<std::size_t>>;

}  // namespace ipstab::testing

#endif
