#pragma once

#include <cstdint>
#include <span>

#include "corecluster/graph.hpp"

namespace corecluster {

// tau bounds detected cluster sizes to [tau, 2*tau - 1]. gamma scales the
// edge budget of the greedy variant, which examines only the
// floor(gamma * tau) heaviest edges of the full graph.
struct ClusterParams {
  std::uint32_t tau = 2;
  double gamma = 20.0;
};

// Merge/freeze scan shared by both variants.
//
// Edges are taken in the given order, at most edge_budget of them. An edge
// whose endpoints lie in two distinct growable groups merges them; the
// moment a group's size lands in [tau, 2tau-1] it is frozen as a core and
// never changes again (edges touching a frozen group are skipped). A merge
// that jumps a group straight past 2tau-1 does not freeze it; the group
// keeps growing. Cores are then renumbered 1..K by first member appearance
// in node order, all other nodes get label 0.
//
// Exposed so callers can drive or time the scan with a custom edge order;
// prefer core_clustering / core_clustering_greedy.
LabelArray cluster_scan(NodeId node_count, std::span<const WeightedEdge> edges,
                        std::size_t edge_budget, std::uint32_t tau);

// Standard variant: consumes a spanning forest (see maximum_spanning_tree)
// and scans its edges by increasing weight. tau above the node count yields
// all-zero labels; tau < 2 is an error, as is a cyclic input.
LabelArray core_clustering(const WeightedGraph& forest, const ClusterParams& params);

// Greedy variant: consumes the full graph and scans the floor(gamma*tau)
// heaviest edges by decreasing weight. A zero edge budget yields all-zero
// labels.
LabelArray core_clustering_greedy(const WeightedGraph& graph, const ClusterParams& params);

// floor(gamma * tau); throws on a negative or non-finite gamma.
std::size_t greedy_edge_budget(const ClusterParams& params);

// The edge_budget heaviest edges in decreasing-weight order (ties by
// canonical edge order), selected without sorting the whole edge list.
std::vector<WeightedEdge> heaviest_edges(const WeightedGraph& graph, std::size_t edge_budget);

}  // namespace corecluster
