#include "corecluster/centrality.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace corecluster {

double similarity_distance(double weight) { return 1.0 - weight; }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using LocalAdjacency = std::vector<std::vector<std::pair<std::uint32_t, double>>>;

// Dijkstra over a small induced subgraph, local indexing.
std::vector<double> shortest_paths(const LocalAdjacency& adj, std::uint32_t source) {
  std::vector<double> dist(adj.size(), kInf);
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, node] = queue.top();
    queue.pop();
    if (d > dist[node]) continue;  // stale entry
    for (const auto& [next, len] : adj[node]) {
      const double candidate = d + len;
      if (candidate < dist[next]) {
        dist[next] = candidate;
        queue.emplace(candidate, next);
      }
    }
  }
  return dist;
}

LocalAdjacency induced_adjacency(const WeightedGraph& graph,
                                 const std::unordered_map<NodeId, std::uint32_t>& local,
                                 LengthTransform length) {
  LocalAdjacency adj(local.size());
  for (const auto& e : graph.edges()) {
    const auto iu = local.find(e.u);
    if (iu == local.end()) continue;
    const auto iv = local.find(e.v);
    if (iv == local.end()) continue;
    const double len = length(e.weight);
    if (!(len >= 0.0)) throw std::invalid_argument("edge length transform produced a negative length");
    adj[iu->second].emplace_back(iv->second, len);
    adj[iv->second].emplace_back(iu->second, len);
  }
  return adj;
}

}  // namespace

std::map<NodeId, double> dijkstra_distances(const WeightedGraph& graph,
                                            const std::vector<NodeId>& members, NodeId source,
                                            LengthTransform length) {
  std::unordered_map<NodeId, std::uint32_t> local;
  local.reserve(members.size());
  for (const auto m : members) {
    if (m >= graph.node_count()) throw std::invalid_argument("member id out of range");
    local.emplace(m, static_cast<std::uint32_t>(local.size()));
  }
  const auto it = local.find(source);
  if (it == local.end()) throw std::invalid_argument("source is not a cluster member");

  const auto dist = shortest_paths(induced_adjacency(graph, local, length), it->second);
  std::map<NodeId, double> out;
  for (const auto& [node, index] : local) out[node] = dist[index];
  return out;
}

CoreClusterSet cluster_centers(const WeightedGraph& graph, const LabelArray& labels,
                               LengthTransform length) {
  if (labels.size() != graph.node_count()) {
    throw std::invalid_argument("label array does not match graph node count");
  }
  CoreClusterSet set = clusters_from_labels(labels);

  // Local index of each clustered node within its cluster (members sorted).
  std::vector<std::uint32_t> local_index(graph.node_count(), 0);
  for (const auto& cluster : set.clusters) {
    for (std::uint32_t i = 0; i < cluster.members.size(); ++i) {
      local_index[cluster.members[i]] = i;
    }
  }

  // One pass buckets within-cluster edges by cluster id.
  std::vector<LocalAdjacency> adjacencies(set.size());
  for (std::size_t c = 0; c < set.size(); ++c) {
    adjacencies[c].resize(set.clusters[c].members.size());
  }
  for (const auto& e : graph.edges()) {
    const auto id = labels.values[e.u];
    if (id == 0 || id != labels.values[e.v]) continue;
    const double len = length(e.weight);
    if (!(len >= 0.0)) throw std::invalid_argument("edge length transform produced a negative length");
    auto& adj = adjacencies[id - 1];
    adj[local_index[e.u]].emplace_back(local_index[e.v], len);
    adj[local_index[e.v]].emplace_back(local_index[e.u], len);
  }

  for (std::size_t c = 0; c < set.size(); ++c) {
    auto& cluster = set.clusters[c];
    const auto& adj = adjacencies[c];
    const std::size_t m = cluster.members.size();
    double best_mean = kInf;
    std::optional<NodeId> center;
    for (std::uint32_t i = 0; i < m; ++i) {
      const auto dist = shortest_paths(adj, i);
      double sum = 0.0;
      for (std::uint32_t j = 0; j < m; ++j) {
        if (j != i) sum += dist[j];
      }
      const double mean = m > 1 ? sum / static_cast<double>(m - 1) : 0.0;
      // strict < keeps the lowest node id on ties (members are sorted)
      if (mean < best_mean) {
        best_mean = mean;
        center = cluster.members[i];
      }
    }
    cluster.center = center;  // nullopt when every mean was infinite
  }
  return set;
}

}  // namespace corecluster
