#include "ipstab/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "detail/violation_kernel.hpp"
#include "ipstab/error.hpp"

namespace ipstab {

PartitionStream::PartitionStream(std::size_t n, std::size_t k, std::size_t max_n) : n_(n), k_(k), labels_(n) {
  if (n > max_n) {
    throw ResourceError("brute-force oracle refuses n = " + std::to_string(n) + " (limit " + std::to_string(max_n) +
                        ")");
  }
  if (n == 0 || k == 0 || k > n) {
    throw ContractError("partition enumeration needs 1 <= k <= n (n = " + std::to_string(n) +
                        ", k = " + std::to_string(k) + ")");
  }
}

// Writes the lexicographically smallest suffix labels_[from..] that brings the
// block count up to exactly k, given the largest label used so far.
bool PartitionStream::fill_suffix(std::size_t from, std::size_t block_max) {
  const std::size_t remaining = n_ - from;
  const std::size_t missing = k_ - 1 - block_max;
  if (remaining < missing) return false;
  const std::size_t zeros = remaining - missing;
  for (std::size_t i = 0; i < remaining; ++i) labels_[from + i] = i < zeros ? 0 : block_max + 1 + (i - zeros);
  return true;
}

bool PartitionStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    labels_[0] = 0;
    fill_suffix(1, 0);
    return true;
  }
  std::vector<std::size_t> prefix_max(n_);
  prefix_max[0] = labels_[0];
  for (std::size_t i = 1; i < n_; ++i) prefix_max[i] = std::max(prefix_max[i - 1], labels_[i]);

  for (std::size_t i = n_; i-- > 1;) {
    const std::size_t before = prefix_max[i - 1];
    const std::size_t cap = std::min(k_ - 1, before + 1);
    for (std::size_t value = labels_[i] + 1; value <= cap; ++value) {
      if (fill_suffix(i + 1, std::max(before, value))) {
        labels_[i] = value;
        return true;
      }
    }
  }
  done_ = true;
  return false;
}

OracleResult optimal_alpha(const MetricSpace& space, std::size_t k, Objective objective, std::size_t max_n) {
  const std::size_t n = space.size();
  PartitionStream stream(n, k, max_n);
  std::vector<detail::Accumulator> acc;
  std::vector<std::size_t> best;
  double best_alpha = std::numeric_limits<double>::infinity();
  std::uint64_t examined = 0;
  while (stream.advance()) {
    ++examined;
    const auto labels = stream.labels();
    double worst = 0.0;
    for (std::size_t x = 0; x < n && !(worst >= best_alpha && !best.empty()); ++x) {
      worst = std::max(worst, detail::point_violation(space.row(x), labels, k, x, objective, acc));
    }
    if (best.empty() || worst < best_alpha) {
      best_alpha = worst;
      best.assign(labels.begin(), labels.end());
    }
  }
  return OracleResult{best_alpha, Clustering(std::move(best), k), examined};
}

Certificate certify(const MetricSpace& space, const Clustering& clustering, Objective objective, double alpha) {
  if (clustering.size() != space.size()) throw ContractError("clustering and space sizes differ");
  std::vector<detail::Accumulator> acc;
  const auto& labels = clustering.assignment();
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (!detail::accumulate_point(space.row(x), labels, clustering.k(), x, acc)) continue;
    const double own = acc[labels[x]].value(objective);
    for (std::size_t c = 0; c < clustering.k(); ++c) {
      if (c == labels[x]) continue;
      const double r = detail::ratio(own, acc[c].value(objective));
      if (r > alpha) return Certificate{false, ViolationWitness{x, c, r}};
    }
  }
  return Certificate{};
}

}  // namespace ipstab
