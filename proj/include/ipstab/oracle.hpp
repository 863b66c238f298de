#ifndef IPSTAB_ORACLE_HPP
#define IPSTAB_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ipstab/clustering.hpp"
#include "ipstab/metric.hpp"
#include "ipstab/stability.hpp"

namespace ipstab {

// Largest n the brute-force oracle accepts unless the caller raises it.
inline constexpr std::size_t kDefaultOracleMaxN = 14;

// Enumerates every partition of {0..n-1} into exactly k nonempty unlabeled
// blocks, as restricted-growth strings in lexicographic order. Yields S(n, k)
// partitions. Throws ResourceError when n exceeds max_n.
class PartitionStream {
 public:
  PartitionStream(std::size_t n, std::size_t k, std::size_t max_n = kDefaultOracleMaxN);

  // Moves to the next partition; false once the stream is exhausted.
  bool advance();
  // Labels of the current partition (valid after a successful advance()).
  std::span<const std::size_t> labels() const { return labels_; }
  Clustering clustering() const { return Clustering(labels_, k_); }

  std::optional<Clustering> next() {
    if (!advance()) return std::nullopt;
    return clustering();
  }

 private:
  bool fill_suffix(std::size_t from, std::size_t block_max);

  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> labels_;
  bool started_ = false;
  bool done_ = false;
};

struct OracleResult {
  double alpha_star = 0.0;
  Clustering best_clustering;
  std::uint64_t partitions_examined = 0;
};

// Minimum of MaxVi over all k-partitions; the first enumerated minimizer wins.
OracleResult optimal_alpha(const MetricSpace& space, std::size_t k, Objective objective,
                           std::size_t max_n = kDefaultOracleMaxN);

struct ViolationWitness {
  std::size_t point;
  std::size_t cluster;  // the other cluster x would rather join
  double ratio;
};

struct Certificate {
  bool stable = true;
  std::optional<ViolationWitness> witness;  // first offender in (point, cluster) order
};

// True iff every non-singleton point x satisfies
// f(x, C(x) \ {x}) / f(x, C') <= alpha for every other cluster C'.
Certificate certify(const MetricSpace& space, const Clustering& clustering, Objective objective, double alpha);

}  // namespace ipstab

#endif  // IPSTAB_ORACLE_HPP
