#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace corecluster {

using NodeId = std::uint32_t;

// Undirected weighted edge, kept canonical (u < v).
struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;
};

// Immutable undirected weighted graph over p nodes. Edges are unique per
// unordered pair, self-loop free, with weights in (0,1]. The edge list is
// stored sorted by (u,v) so serialization and weight-tie handling downstream
// are deterministic. Safe to share read-only across threads.
class WeightedGraph {
 public:
  WeightedGraph(NodeId node_count, std::vector<WeightedEdge> edges,
                std::vector<std::string> node_names = {});

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  // Empty when the graph is unnamed.
  const std::vector<std::string>& node_names() const { return node_names_; }

 private:
  NodeId node_count_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<std::string> node_names_;
};

// Per-node cluster assignment; 0 means "not in any core cluster", ids >= 1
// form a contiguous range 1..K.
struct LabelArray {
  std::vector<std::uint32_t> values;

  std::size_t size() const { return values.size(); }
  std::uint32_t cluster_count() const;
};

struct CoreCluster {
  std::uint32_t id = 0;
  std::vector<NodeId> members;  // sorted by node id
  std::optional<NodeId> center;
  std::optional<double> ic_score;
};

struct CoreClusterSet {
  std::vector<CoreCluster> clusters;

  bool empty() const { return clusters.empty(); }
  std::size_t size() const { return clusters.size(); }
};

// Groups nonzero labels into clusters, one per distinct id in 1..K, members
// sorted by node id. Throws if the nonzero ids are not contiguous from 1.
CoreClusterSet clusters_from_labels(const LabelArray& labels);

}  // namespace corecluster
