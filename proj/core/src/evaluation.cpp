#include "corecluster/evaluation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace corecluster {

double external_score(const GroundTruth& truth, const LabelArray& predicted) {
  const std::size_t p = predicted.size();
  if (truth.assignment.size() != p) {
    throw std::invalid_argument("ground truth and prediction lengths differ");
  }
  for (const auto id : truth.assignment) {
    if (id == 0 || id > truth.cluster_count) {
      throw std::invalid_argument("ground truth must assign every node a cluster in 1..K");
    }
  }
  if (p == 0) return 0.0;

  const CoreClusterSet clusters = clusters_from_labels(predicted);
  std::size_t total = 0;
  std::unordered_map<std::uint32_t, std::size_t> overlap;
  for (const auto& cluster : clusters.clusters) {
    overlap.clear();
    std::size_t best = 0;
    for (const auto member : cluster.members) {
      best = std::max(best, ++overlap[truth.assignment[member]]);
    }
    total += best;
  }
  return static_cast<double>(total) / static_cast<double>(p);
}

InternalScore internal_score(const SimilarityMatrix& sim, const LabelArray& predicted) {
  if (predicted.size() != sim.variable_count()) {
    throw std::invalid_argument("label array does not match similarity matrix size");
  }
  const CoreClusterSet clusters = clusters_from_labels(predicted);
  if (clusters.empty()) throw std::invalid_argument("no clusters to score");

  const double denom = sim.max_off_diagonal();
  InternalScore out;
  out.per_cluster.reserve(clusters.size());
  double sum = 0.0;
  for (const auto& cluster : clusters.clusters) {
    double weakest = 1.0;
    for (const auto i : cluster.members) {
      double strongest = 0.0;
      for (const auto k : cluster.members) {
        if (k != i) strongest = std::max(strongest, sim(i, k));
      }
      weakest = std::min(weakest, strongest);
    }
    const double ic = denom > 0.0 ? weakest / denom : 0.0;
    out.per_cluster.push_back(ic);
    sum += ic;
  }
  out.mean = sum / static_cast<double>(out.per_cluster.size());
  return out;
}

}  // namespace corecluster
