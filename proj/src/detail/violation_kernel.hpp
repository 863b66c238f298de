#ifndef IPSTAB_DETAIL_VIOLATION_KERNEL_HPP
#define IPSTAB_DETAIL_VIOLATION_KERNEL_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "ipstab/stability.hpp"

namespace ipstab::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Accumulator {
  double sum = 0.0;
  double min = kInf;
  double max = 0.0;
  std::size_t count = 0;

  void add(double d) {
    sum += d;
    min = std::min(min, d);
    max = std::max(max, d);
    ++count;
  }

  double value(Objective objective) const {
    switch (objective) {
      case Objective::Average:
        return sum / static_cast<double>(count);
      case Objective::Minimum:
        return min;
      case Objective::Maximum:
        return max;
    }
    return 0.0;
  }
};

// own / other, with 0/0 -> 0 and positive/0 -> +inf.
inline double ratio(double own, double other) {
  if (other == 0.0) return own == 0.0 ? 0.0 : kInf;
  return own / other;
}

// Accumulates distances from x into one bucket per cluster, leaving x itself
// out. Returns false when x is alone in its cluster.
inline bool accumulate_point(std::span<const double> row, std::span<const std::size_t> labels, std::size_t k,
                             std::size_t x, std::vector<Accumulator>& acc) {
  acc.assign(k, Accumulator{});
  for (std::size_t y = 0; y < row.size(); ++y) {
    if (y != x) acc[labels[y]].add(row[y]);
  }
  return acc[labels[x]].count > 0;
}

inline double point_violation(std::span<const double> row, std::span<const std::size_t> labels, std::size_t k,
                              std::size_t x, Objective objective, std::vector<Accumulator>& acc) {
  if (!accumulate_point(row, labels, k, x, acc)) return 0.0;
  const std::size_t own = labels[x];
  const double own_value = acc[own].value(objective);
  double worst = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    if (c != own) worst = std::max(worst, ratio(own_value, acc[c].value(objective)));
  }
  return worst;
}

}  // namespace ipstab::detail

#endif  // IPSTAB_DETAIL_VIOLATION_KERNEL_HPP
