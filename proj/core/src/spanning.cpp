#include "corecluster/spanning.hpp"

#include <algorithm>
#include <tuple>

#include "corecluster/union_find.hpp"

namespace corecluster {

WeightedGraph maximum_spanning_tree(const WeightedGraph& graph) {
  std::vector<WeightedEdge> order = graph.edges();
  // Weight descending, canonical (u,v) ascending among equal weights. The
  // composite key is a total order, so no stable sort is needed for
  // deterministic output.
  std::sort(order.begin(), order.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });

  DisjointSet components(graph.node_count());
  std::vector<WeightedEdge> tree;
  if (graph.node_count() > 0) tree.reserve(graph.node_count() - 1);
  for (const auto& e : order) {
    if (components.find(e.u) == components.find(e.v)) continue;
    components.unite(e.u, e.v);
    tree.push_back(e);
    if (tree.size() + 1 == graph.node_count()) break;
  }
  return WeightedGraph(graph.node_count(), std::move(tree), graph.node_names());
}

}  // namespace corecluster
