#pragma once

#include <cstdint>
#include <vector>

#include "corecluster/graph.hpp"
#include "corecluster/similarity.hpp"

namespace corecluster {

// Reference clustering for synthetic data: every node carries a cluster id
// in 1..cluster_count.
struct GroundTruth {
  std::vector<std::uint32_t> assignment;
  std::uint32_t cluster_count = 0;
};

// External validation score in [0,1]: for each predicted cluster, the size
// of its largest overlap with a single truth cluster, summed and divided by
// the node count. 1 means every node is covered and every predicted cluster
// sits inside one truth cluster. An empty prediction scores 0.
double external_score(const GroundTruth& truth, const LabelArray& predicted);

struct InternalScore {
  std::vector<double> per_cluster;  // indexed by cluster id - 1
  double mean = 0.0;
};

// Internal connection-strength score per cluster: the weakest member's
// strongest within-cluster similarity, divided by the strongest similarity
// between any two distinct variables in the whole matrix. Requires at least
// one predicted cluster.
InternalScore internal_score(const SimilarityMatrix& sim, const LabelArray& predicted);

}  // namespace corecluster
