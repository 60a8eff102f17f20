#include "corecluster/core_clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "corecluster/union_find.hpp"

namespace corecluster {

namespace {

void validate_tau(std::uint32_t tau) {
  if (tau < 2) throw std::invalid_argument("tau must be at least 2");
}

bool weight_increasing(const WeightedEdge& a, const WeightedEdge& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return std::tie(a.u, a.v) < std::tie(b.u, b.v);
}

bool weight_decreasing(const WeightedEdge& a, const WeightedEdge& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return std::tie(a.u, a.v) < std::tie(b.u, b.v);
}

}  // namespace

LabelArray cluster_scan(NodeId node_count, std::span<const WeightedEdge> edges,
                        std::size_t edge_budget, std::uint32_t tau) {
  validate_tau(tau);
  DisjointSet groups(node_count);
  // Freeze sequence number per group root; 0 while the group can still grow.
  // Frozen groups never take part in a union, so their roots stay valid.
  std::vector<std::uint32_t> freeze_seq(node_count, 0);
  std::uint32_t frozen_count = 0;

  const std::uint64_t window_hi = 2ull * tau - 1;
  const std::size_t budget = std::min(edge_budget, edges.size());
  for (std::size_t k = 0; k < budget; ++k) {
    const auto ru = groups.find(edges[k].u);
    const auto rv = groups.find(edges[k].v);
    if (ru == rv) continue;
    // Frozen cores are immutable; letting them absorb later merges would
    // grow them past 2*tau - 1.
    if (freeze_seq[ru] != 0 || freeze_seq[rv] != 0) continue;
    const auto root = groups.unite(ru, rv);
    const auto size = groups.set_size(root);
    if (size >= tau && size <= window_hi) freeze_seq[root] = ++frozen_count;
  }

  // Post-treatment: nodes outside frozen cores get 0; cores are renumbered
  // 1..K by first appearance in node order.
  LabelArray labels;
  labels.values.assign(node_count, 0);
  std::vector<std::uint32_t> public_id(frozen_count + 1, 0);
  std::uint32_t next_id = 0;
  for (NodeId n = 0; n < node_count; ++n) {
    const auto seq = freeze_seq[groups.find(n)];
    if (seq == 0) continue;
    if (public_id[seq] == 0) public_id[seq] = ++next_id;
    labels.values[n] = public_id[seq];
  }
  return labels;
}

LabelArray core_clustering(const WeightedGraph& forest, const ClusterParams& params) {
  validate_tau(params.tau);
  {
    DisjointSet check(forest.node_count());
    for (const auto& e : forest.edges()) {
      if (check.find(e.u) == check.find(e.v)) {
        throw std::invalid_argument("input graph is not a spanning forest");
      }
      check.unite(e.u, e.v);
    }
  }
  std::vector<WeightedEdge> order = forest.edges();
  std::sort(order.begin(), order.end(), weight_increasing);
  return cluster_scan(forest.node_count(), order, order.size(), params.tau);
}

std::size_t greedy_edge_budget(const ClusterParams& params) {
  if (!std::isfinite(params.gamma) || params.gamma < 0.0) {
    throw std::invalid_argument("gamma must be a non-negative finite value");
  }
  const double budget = std::floor(params.gamma * static_cast<double>(params.tau));
  if (budget >= 1e18) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(budget);
}

std::vector<WeightedEdge> heaviest_edges(const WeightedGraph& graph, std::size_t edge_budget) {
  std::vector<WeightedEdge> order = graph.edges();
  if (edge_budget < order.size()) {
    // Selecting the scanned prefix costs O(K_E + budget log budget) instead
    // of a full O(K_E log K_E) sort; the comparator is a total order, so
    // the prefix matches what a stable full sort would put there.
    std::nth_element(order.begin(), order.begin() + edge_budget, order.end(), weight_decreasing);
    order.resize(edge_budget);
  }
  std::sort(order.begin(), order.end(), weight_decreasing);
  return order;
}

LabelArray core_clustering_greedy(const WeightedGraph& graph, const ClusterParams& params) {
  validate_tau(params.tau);
  const std::size_t budget = greedy_edge_budget(params);
  if (budget == 0) {
    LabelArray labels;
    labels.values.assign(graph.node_count(), 0);
    return labels;
  }
  const std::vector<WeightedEdge> order = heaviest_edges(graph, budget);
  return cluster_scan(graph.node_count(), order, budget, params.tau);
}

}  // namespace corecluster
