#pragma once

#include "corecluster/graph.hpp"

namespace corecluster {

// Maximum-weight spanning forest (Kruskal): acyclic, one tree per connected
// component of the input, total weight maximal. Equal weights are broken by
// canonical (u,v) edge order, so the result is deterministic.
WeightedGraph maximum_spanning_tree(const WeightedGraph& graph);

}  // namespace corecluster
