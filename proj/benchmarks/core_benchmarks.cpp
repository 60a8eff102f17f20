#include <benchmark/benchmark.h>

#include "corecluster/core_clustering.hpp"
#include "corecluster/rng.hpp"
#include "corecluster/similarity.hpp"
#include "corecluster/spanning.hpp"
#include "corecluster/union_find.hpp"

namespace {

using namespace corecluster;

SimilarityMatrix random_similarity(std::size_t p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> s(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    s[i * p + i] = 1.0;
    for (std::size_t j = i + 1; j < p; ++j) {
      const double value = rng.uniform();
      s[i * p + j] = value;
      s[j * p + i] = value;
    }
  }
  return SimilarityMatrix(p, std::move(s));
}

ObservationMatrix random_observations(std::size_t n, std::size_t p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> values(n * p);
  for (auto& v : values) v = rng.gaussian();
  return ObservationMatrix(n, p, std::move(values));
}

void BM_PearsonAbsMatrix(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const ObservationMatrix obs = random_observations(100, p, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pearson_abs_matrix(obs));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(p * p));
}
BENCHMARK(BM_PearsonAbsMatrix)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_MaximumSpanningTree(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const WeightedGraph graph = build_graph(random_similarity(p, 2), 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximum_spanning_tree(graph));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(graph.edge_count()));
}
BENCHMARK(BM_MaximumSpanningTree)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_CoreClustering(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const WeightedGraph forest = maximum_spanning_tree(build_graph(random_similarity(p, 3), 0.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(core_clustering(forest, ClusterParams{20}));
  }
}
BENCHMARK(BM_CoreClustering)->RangeMultiplier(2)->Range(128, 2048);

void BM_GreedyCoreClustering(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const WeightedGraph graph = build_graph(random_similarity(p, 4), 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(core_clustering_greedy(graph, ClusterParams{30, 20.0}));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(graph.edge_count()));
}
BENCHMARK(BM_GreedyCoreClustering)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_DisjointSetUnite(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  Rng rng(5);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(n);
  for (auto& [a, b] : pairs) {
    a = static_cast<std::uint32_t>(rng.next_below(n));
    b = static_cast<std::uint32_t>(rng.next_below(n));
  }
  for (auto _ : state) {
    DisjointSet sets(n);
    for (const auto& [a, b] : pairs) sets.unite(a, b);
    benchmark::DoNotOptimize(sets);
  }
}
BENCHMARK(BM_DisjointSetUnite)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

}  // namespace

BENCHMARK_MAIN();
