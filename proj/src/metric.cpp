#include "ipstab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "ipstab/error.hpp"

namespace ipstab {

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::Points:
      return "euclidean";
    case MetricKind::Matrix:
      return "matrix";
    case MetricKind::Graph:
      return "graph";
  }
  return "unknown";
}

std::vector<std::optional<std::size_t>> bfs_distances(std::size_t n, std::span<const Edge> edges,
                                                      std::size_t source) {
  if (source >= n) throw InputError("BFS source " + std::to_string(source) + " out of range");
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      std::ostringstream os;
      os << "edge (" << e.u << ", " << e.v << ") has an endpoint outside [0, " << n << ")";
      throw InputError(os.str());
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::optional<std::size_t>> hops(n);
  std::deque<std::size_t> queue{source};
  hops[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (!hops[v]) {
        hops[v] = *hops[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return hops;
}

MetricSpace::MetricSpace(std::size_t n, std::vector<double> dist, MetricKind kind, std::string label)
    : n_(n),
      dist_(std::move(dist)),
      kind_(kind),
      label_(std::move(label)),
      sorted_(std::make_unique<SortedRows>()) {
  max_distance_ = dist_.empty() ? 0.0 : *std::max_element(dist_.begin(), dist_.end());
}

MetricSpace MetricSpace::from_points(const PointSet& points, std::string label) {
  if (points.empty()) throw InputError("point set is empty");
  const std::size_t dim = points.front().size();
  if (dim == 0) throw InputError("points must have dimension >= 1");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      std::ostringstream os;
      os << "point " << i << " has dimension " << points[i].size() << ", expected " << dim;
      throw InputError(os.str());
    }
    for (double c : points[i]) {
      if (!std::isfinite(c)) throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  const std::size_t n = points.size();
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        const double diff = points[i][d] - points[j][d];
        acc += diff * diff;
      }
      const double v = std::sqrt(acc);
      dist[i * n + j] = v;
      dist[j * n + i] = v;
    }
  }
  MetricSpace space(n, std::move(dist), MetricKind::Points, std::move(label));
  space.points_ = points;
  return space;
}

MetricSpace MetricSpace::from_matrix(const std::vector<std::vector<double>>& matrix, std::string label) {
  const std::size_t n = matrix.size();
  if (n == 0) throw InputError("distance matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      std::ostringstream os;
      os << "distance matrix is not square: row " << i << " has " << matrix[i].size() << " entries, expected " << n;
      throw InputError(os.str());
    }
  }
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = matrix[i][j];
      if (!std::isfinite(a)) throw InputError("non-finite distance at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      if (a < 0.0) throw InputError("negative distance at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      if (i == j) {
        if (a != 0.0) throw InputError("nonzero diagonal entry at (" + std::to_string(i) + ", " + std::to_string(i) + ")");
        continue;
      }
      const double b = matrix[j][i];
      if (std::abs(a - b) > kMetricTolerance * std::max(a, b)) {
        std::ostringstream os;
        os << "asymmetric distances: d(" << i << "," << j << ")=" << a << " but d(" << j << "," << i << ")=" << b;
        throw InputError(os.str());
      }
      dist[i * n + j] = 0.5 * (a + b);
    }
  }
  MetricSpace space(n, std::move(dist), MetricKind::Matrix, std::move(label));
  space.validate();
  return space;
}

MetricSpace MetricSpace::from_graph(std::size_t n, std::span<const Edge> edges, std::string label) {
  if (n == 0) throw InputError("graph has no vertices");
  // Validates the endpoints once before the n traversals.
  (void)bfs_distances(n, edges, 0);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<double> dist(n * n, 0.0);
  std::vector<std::int64_t> hops(n);
  std::vector<std::size_t> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(hops.begin(), hops.end(), -1);
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    hops[s] = 0;
    while (head < tail) {
      const std::size_t u = queue[head++];
      for (std::size_t v : adj[u]) {
        if (hops[v] < 0) {
          hops[v] = hops[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (hops[t] < 0) {
        std::ostringstream os;
        os << "graph is disconnected: no path between " << s << " and " << t;
        throw InputError(os.str());
      }
      dist[s * n + t] = static_cast<double>(hops[t]);
    }
  }
  return MetricSpace(n, std::move(dist), MetricKind::Graph, std::move(label));
}

void MetricSpace::build_sorted_rows() const {
  std::call_once(sorted_->once, [this] {
    auto& entries = sorted_->entries;
    entries.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Neighbor* out = entries.data() + i * n_;
      for (std::size_t j = 0; j < n_; ++j) out[j] = {dist_[i * n_ + j], static_cast<std::uint32_t>(j)};
      std::sort(out, out + n_, [](const Neighbor& a, const Neighbor& b) {
        return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
      });
    }
  });
}

std::span<const Neighbor> MetricSpace::sorted_row(std::size_t i) const {
  if (i >= n_) throw ContractError("row index " + std::to_string(i) + " out of range");
  build_sorted_rows();
  return {sorted_->entries.data() + i * n_, n_};
}

std::size_t MetricSpace::ball_size(std::size_t center, double radius) const {
  if (center >= n_) throw ContractError("ball center " + std::to_string(center) + " out of range");
  if (!(radius >= 0.0)) throw ContractError("ball radius must be non-negative");
  const auto sorted = sorted_row(center);
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), radius,
                                   [](double r, const Neighbor& nb) { return r < nb.distance; });
  return static_cast<std::size_t>(it - sorted.begin());
}

void MetricSpace::validate() const {
  const double tau = tolerance();
  for (std::size_t i = 0; i < n_; ++i) {
    if (distance(i, i) != 0.0) throw InputError("nonzero diagonal entry at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (distance(i, j) < 0.0) {
        throw InputError("negative distance between " + std::to_string(i) + " and " + std::to_string(j));
      }
      if (std::abs(distance(i, j) - distance(j, i)) > tau) {
        throw InputError("asymmetric distance between " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  for (std::size_t m = 0; m < n_; ++m) {
    const double* dm = dist_.data() + m * n_;
    for (std::size_t i = 0; i < n_; ++i) {
      const double* di = dist_.data() + i * n_;
      const double dim = di[m];
      for (std::size_t j = 0; j < n_; ++j) {
        if (di[j] > dim + dm[j] + tau) {
          std::ostringstream os;
          os << "triangle inequality violated for (" << i << ", " << j << ", " << m << "): d(" << i << "," << j
             << ")=" << di[j] << " > d(" << i << "," << m << ")+d(" << m << "," << j << ")=" << dim + dm[j];
          throw InputError(os.str());
        }
      }
    }
  }
}

}  // namespace ipstab
