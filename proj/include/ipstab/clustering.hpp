#ifndef IPSTAB_CLUSTERING_HPP
#define IPSTAB_CLUSTERING_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace ipstab {

// A partition of {0, ..., n-1} into k nonempty clusters.
class Clustering {
 public:
  // Every label must lie in [0, k) and every cluster must be nonempty.
  Clustering(std::vector<std::size_t> assignment, std::size_t k);

  // Relabels arbitrary labels onto 0..k'-1, preserving the order of the label
  // values. Unused labels simply disappear.
  static Clustering compact(std::span<const std::size_t> labels);
  // Relabels clusters by order of first occurrence along the point indices.
  static Clustering canonical(std::span<const std::size_t> labels);

  std::size_t size() const { return assignment_.size(); }
  std::size_t k() const { return members_.size(); }
  std::size_t cluster_of(std::size_t point) const { return assignment_[point]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  // Members of cluster c in increasing index order.
  const std::vector<std::size_t>& members(std::size_t c) const { return members_[c]; }
  const std::vector<std::vector<std::size_t>>& clusters() const { return members_; }

  friend bool operator==(const Clustering& a, const Clustering& b) { return a.assignment_ == b.assignment_; }

 private:
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> members_;
};

}  // namespace ipstab

#endif  // IPSTAB_CLUSTERING_HPP
