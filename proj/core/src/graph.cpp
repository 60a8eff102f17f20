#include "corecluster/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace corecluster {

WeightedGraph::WeightedGraph(NodeId node_count, std::vector<WeightedEdge> edges,
                             std::vector<std::string> node_names)
    : node_count_(node_count), edges_(std::move(edges)), node_names_(std::move(node_names)) {
  if (!node_names_.empty() && node_names_.size() != node_count_) {
    throw std::invalid_argument("node name count does not match node count");
  }
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (e.v >= node_count_) throw std::invalid_argument("edge endpoint out of range");
    if (!(e.weight > 0.0) || e.weight > 1.0) {
      throw std::invalid_argument("edge weight outside (0,1]");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k - 1].u == edges_[k].u && edges_[k - 1].v == edges_[k].v) {
      throw std::invalid_argument("duplicate edge for one unordered node pair");
    }
  }
}

std::uint32_t LabelArray::cluster_count() const {
  std::uint32_t max_id = 0;
  for (const auto v : values) max_id = std::max(max_id, v);
  return max_id;
}

CoreClusterSet clusters_from_labels(const LabelArray& labels) {
  const std::uint32_t count = labels.cluster_count();
  std::vector<std::vector<NodeId>> members(count);
  for (NodeId n = 0; n < labels.values.size(); ++n) {
    const auto id = labels.values[n];
    if (id != 0) members[id - 1].push_back(n);  // ascending n keeps members sorted
  }
  CoreClusterSet set;
  set.clusters.reserve(count);
  for (std::uint32_t id = 1; id <= count; ++id) {
    auto& group = members[id - 1];
    if (group.empty()) throw std::invalid_argument("cluster ids are not contiguous from 1");
    set.clusters.push_back(CoreCluster{id, std::move(group), std::nullopt, std::nullopt});
  }
  return set;
}

}  // namespace corecluster
