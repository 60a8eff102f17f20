#pragma once

#include <map>
#include <vector>

#include "corecluster/graph.hpp"

namespace corecluster {

// Edge length used for shortest paths over a similarity graph. The default
// maps similarity w to dissimilarity 1 - w, so w = 1 means distance 0.
using LengthTransform = double (*)(double weight);
double similarity_distance(double weight);

// Shortest-path distances from source to every member, restricted to the
// subgraph induced by `members`. Unreachable members get +infinity. The
// source must be a member.
std::map<NodeId, double> dijkstra_distances(const WeightedGraph& graph,
                                            const std::vector<NodeId>& members,
                                            NodeId source,
                                            LengthTransform length = similarity_distance);

// Builds the cluster view and selects each cluster's central node: the
// member with the lowest mean shortest-path distance to the other members,
// ties broken by lowest node id. A cluster whose induced subgraph leaves
// every member with an infinite mean gets no center.
CoreClusterSet cluster_centers(const WeightedGraph& graph, const LabelArray& labels,
                               LengthTransform length = similarity_distance);

}  // namespace corecluster
