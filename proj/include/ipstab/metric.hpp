#ifndef IPSTAB_METRIC_HPP
#define IPSTAB_METRIC_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ipstab {

using Point = std::vector<double>;
using PointSet = std::vector<Point>;

enum class MetricKind { Points, Matrix, Graph };

const char* to_string(MetricKind kind);

struct Neighbor {
  double distance;
  std::uint32_t index;
};

struct Edge {
  std::size_t u;
  std::size_t v;
};

// Relative tolerance used when checking the metric axioms.
inline constexpr double kMetricTolerance = 1e-9;

// Hop distances from `source` in an unweighted undirected graph. Unreachable
// vertices get std::nullopt. Throws InputError on out-of-range endpoints.
std::vector<std::optional<std::size_t>> bfs_distances(std::size_t n, std::span<const Edge> edges,
                                                      std::size_t source);

// A finite metric space with a materialized n x n distance matrix.
//
// The per-row sorted neighbor lists used for ball queries are built lazily on
// the first query (thread-safe), so spaces that never answer ball queries do
// not pay for them. Apart from that cache the object is immutable.
class MetricSpace {
 public:
  // Euclidean distances between equal-dimension, finite coordinate vectors.
  static MetricSpace from_points(const PointSet& points, std::string label = {});
  // Explicit distance matrix. Symmetrized by averaging and fully validated
  // (O(n^3) triangle check).
  static MetricSpace from_matrix(const std::vector<std::vector<double>>& matrix,
                                 std::string label = {});
  // Shortest-path hop counts of a connected unweighted graph.
  static MetricSpace from_graph(std::size_t n, std::span<const Edge> edges, std::string label = {});

  MetricSpace(MetricSpace&&) noexcept = default;
  MetricSpace& operator=(MetricSpace&&) noexcept = default;
  MetricSpace(const MetricSpace&) = delete;
  MetricSpace& operator=(const MetricSpace&) = delete;

  std::size_t size() const { return n_; }
  MetricKind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  double distance(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {dist_.data() + i * n_, n_}; }
  // Row i as (distance, index) pairs, ascending by distance then index.
  std::span<const Neighbor> sorted_row(std::size_t i) const;

  // |{j : d(center, j) <= radius}|, counting the center itself. O(log n).
  std::size_t ball_size(std::size_t center, double radius) const;

  double max_distance() const { return max_distance_; }
  // Absolute tolerance for the triangle inequality: 1e-9 * max distance.
  double tolerance() const { return kMetricTolerance * max_distance_; }

  bool has_coordinates() const { return !points_.empty(); }
  const PointSet& coordinates() const { return points_; }
  std::size_t dimension() const { return points_.empty() ? 0 : points_.front().size(); }

  // Checks zero diagonal, symmetry, non-negativity and the triangle inequality
  // within tolerance(). Throws InputError naming the offending entry or triple.
  void validate() const;

 private:
  struct SortedRows {
    std::once_flag once;
    std::vector<Neighbor> entries;
  };

  MetricSpace(std::size_t n, std::vector<double> dist, MetricKind kind, std::string label);
  void build_sorted_rows() const;

  std::size_t n_ = 0;
  std::vector<double> dist_;
  MetricKind kind_ = MetricKind::Matrix;
  std::string label_;
  double max_distance_ = 0.0;
  PointSet points_;
  std::unique_ptr<SortedRows> sorted_;
};

}  // namespace ipstab

#endif  // IPSTAB_METRIC_HPP
