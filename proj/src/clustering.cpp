#include "ipstab/clustering.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ipstab/error.hpp"

namespace ipstab {

Clustering::Clustering(std::vector<std::size_t> assignment, std::size_t k)
    : assignment_(std::move(assignment)), members_(k) {
  if (assignment_.empty()) throw ContractError("clustering over an empty point set");
  if (k == 0) throw ContractError("clustering needs k >= 1");
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= k) {
      throw ContractError("point " + std::to_string(i) + " has label " + std::to_string(assignment_[i]) +
                          " outside [0, " + std::to_string(k) + ")");
    }
    members_[assignment_[i]].push_back(i);
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (members_[c].empty()) throw ContractError("cluster " + std::to_string(c) + " is empty");
  }
}

Clustering Clustering::compact(std::span<const std::size_t> labels) {
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t l : labels) remap.emplace(l, 0);
  std::size_t next = 0;
  for (auto& [label, id] : remap) id = next++;
  std::vector<std::size_t> assignment(labels.size());
  std::transform(labels.begin(), labels.end(), assignment.begin(), [&](std::size_t l) { return remap.at(l); });
  return Clustering(std::move(assignment), remap.size());
}

Clustering Clustering::canonical(std::span<const std::size_t> labels) {
  std::map<std::size_t, std::size_t> remap;
  std::vector<std::size_t> assignment(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = remap.emplace(labels[i], remap.size());
    assignment[i] = it->second;
  }
  return Clustering(std::move(assignment), remap.size());
}

}  // namespace ipstab
