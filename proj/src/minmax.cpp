#include "ipstab/minmax.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ipstab/error.hpp"

namespace ipstab {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

struct PairEdge {
  double d;
  std::uint32_t i;
  std::uint32_t j;
};

}  // namespace

Clustering min_ip_clustering(const MetricSpace& space, std::size_t k) {
  const std::size_t n = space.size();
  if (k == 0 || k > n) {
    throw InputError("min-IP clustering needs 1 <= k <= n (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
  }
  DisjointSets sets(n);
  if (k < n) {
    std::vector<PairEdge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        edges.push_back({space.distance(i, j), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
    std::sort(edges.begin(), edges.end(), [](const PairEdge& a, const PairEdge& b) {
      if (a.d != b.d) return a.d < b.d;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    for (const PairEdge& e : edges) {
      if (sets.components() == k) break;
      sets.unite(e.i, e.j);
    }
  }
  std::vector<std::size_t> roots(n);
  for (std::size_t x = 0; x < n; ++x) roots[x] = sets.find(x);
  return Clustering::canonical(roots);
}

MaxIpResult max_ip_clustering_detailed(const MetricSpace& space, std::size_t k, std::size_t first) {
  KCenterResult kc = greedy_k_center(space, k, first);
  const std::size_t n = space.size();
  std::vector<std::size_t> label(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = space.row(x);
    std::size_t best = 0;
    for (std::size_t i = 1; i < k; ++i) {
      if (row[kc.centers[i]] < row[kc.centers[best]]) best = i;
    }
    label[x] = best;
  }
  return MaxIpResult{Clustering(std::move(label), k), std::move(kc)};
}

}  // namespace ipstab
