#include "corecluster/synthgen.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <tuple>

#include "corecluster/core_clustering.hpp"
#include "corecluster/spanning.hpp"

namespace corecluster {

double satellite_correlation(std::size_t j, std::size_t n_c, double r_min, double r_max) {
  return r_min + (r_max - r_min) * (1.0 - static_cast<double>(j) / static_cast<double>(n_c));
}

ClusterBlock simulate_cluster(std::size_t n_obs, std::size_t n_c, double r_min, double r_max,
                              double alpha, Rng& rng) {
  if (n_obs == 0) throw std::invalid_argument("observation count must be positive");
  if (n_c == 0) throw std::invalid_argument("cluster size must be positive");
  if (!(r_min > 0.0) || r_min > r_max || r_max > 1.0) {
    throw std::invalid_argument("correlations must satisfy 0 < r_min <= r_max <= 1");
  }
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");

  ClusterBlock block;
  block.n_obs = n_obs;
  block.n_cols = n_c;
  block.hub_index = 0;
  block.values.assign(n_obs * n_c, 0.0);
  for (std::size_t i = 0; i < n_obs; ++i) {
    block.values[i * n_c] = rng.gaussian();
  }
  for (std::size_t j = 2; j <= n_c; ++j) {
    const double r = satellite_correlation(j, n_c, r_min, r_max);
    const double spread = std::sqrt(1.0 / (r * r) - 1.0);
    for (std::size_t i = 0; i < n_obs; ++i) {
      const double noise = alpha * rng.gaussian();
      block.values[i * n_c + (j - 1)] = block.values[i * n_c] + spread * noise;
    }
  }
  return block;
}

SimulatedDataset simulate_dataset(const SimConfig& config) {
  if (config.cluster_sizes.empty()) throw std::invalid_argument("at least one cluster required");
  std::size_t p = 0;
  for (const auto size : config.cluster_sizes) {
    if (size == 0) throw std::invalid_argument("cluster sizes must be positive");
    p += size;
  }

  std::vector<double> values(config.n_obs * p, 0.0);
  GroundTruth truth;
  truth.assignment.assign(p, 0);
  truth.cluster_count = static_cast<std::uint32_t>(config.cluster_sizes.size());

  std::size_t offset = 0;
  for (std::size_t b = 0; b < config.cluster_sizes.size(); ++b) {
    Rng block_rng = Rng::derive(config.seed, b);
    const ClusterBlock block = simulate_cluster(config.n_obs, config.cluster_sizes[b],
                                                config.r_min, config.r_max, config.alpha,
                                                block_rng);
    for (std::size_t i = 0; i < config.n_obs; ++i) {
      for (std::size_t j = 0; j < block.n_cols; ++j) {
        values[i * p + offset + j] = block.values[i * block.n_cols + j];
      }
    }
    for (std::size_t j = 0; j < block.n_cols; ++j) {
      truth.assignment[offset + j] = static_cast<std::uint32_t>(b + 1);
    }
    offset += block.n_cols;
  }
  return SimulatedDataset{ObservationMatrix(config.n_obs, p, std::move(values)),
                          std::move(truth)};
}

namespace {

struct VariantOutcome {
  double score = 0.0;
  double wall_ms = 0.0;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// Both clustering variants on one dataset; the timed section covers the
// variant-specific stage (spanning forest + scan vs. greedy scan), not the
// shared similarity computation.
std::pair<VariantOutcome, VariantOutcome> run_both_variants(const SimulatedDataset& data,
                                                            std::uint32_t tau, double gamma,
                                                            double threshold) {
  const SimilarityMatrix sim = pearson_abs_matrix(data.observations);
  const WeightedGraph graph = build_graph(sim, threshold);

  VariantOutcome standard;
  {
    const auto start = std::chrono::steady_clock::now();
    const WeightedGraph forest = maximum_spanning_tree(graph);
    const LabelArray labels = core_clustering(forest, ClusterParams{tau, gamma});
    standard.wall_ms = elapsed_ms(start);
    standard.score = external_score(data.truth, labels);
  }
  VariantOutcome greedy;
  {
    const auto start = std::chrono::steady_clock::now();
    const LabelArray labels = core_clustering_greedy(graph, ClusterParams{tau, gamma});
    greedy.wall_ms = elapsed_ms(start);
    greedy.score = external_score(data.truth, labels);
  }
  return {standard, greedy};
}

std::vector<std::size_t> scenario_shape(std::uint32_t k_clusters) {
  if (k_clusters == 2) return {2, 2};
  if (k_clusters == 5) return {7, 7, 7, 7, 7};
  throw std::invalid_argument("scenarios a and b support 2 or 5 clusters");
}

std::vector<std::size_t> draw_block_sizes(std::size_t count, Rng& rng) {
  std::vector<std::size_t> sizes(count);
  for (auto& s : sizes) s = rng.uniform() < 0.5 ? 50 : 60;
  return sizes;
}

std::string format_parameter(const char* key, double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%s=%.*f", key, decimals, value);
  return buffer;
}

// Work item: one (parameter point, rep) cell, expanded to two rows.
struct Cell {
  std::size_t param_index = 0;
  std::string parameter;
  std::uint32_t rep = 0;
  VariantOutcome standard;
  VariantOutcome greedy;
};

void run_cells_in_parallel(std::vector<Cell>& cells,
                           const std::function<void(Cell&)>& body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(hw, cells.size()));
  if (workers <= 1) {
    for (auto& cell : cells) body(cell);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
        body(cells[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
}

// Sub-stream id unique per (scenario, parameter point, rep).
std::uint64_t stream_id(char scenario, std::size_t param_index, std::uint32_t rep) {
  return (static_cast<std::uint64_t>(scenario) << 48) |
         (static_cast<std::uint64_t>(param_index) << 32) | rep;
}

}  // namespace

std::vector<ScenarioRow> run_scenario(char name, const ScenarioOptions& opts) {
  if (opts.reps == 0) throw std::invalid_argument("at least one repetition required");
  if (!(opts.threshold >= 0.0) || opts.threshold >= 1.0) {
    throw std::invalid_argument("threshold must lie in [0,1)");
  }

  std::vector<Cell> cells;
  std::function<void(Cell&)> body;
  const double small_shape_gamma = opts.gamma.value_or(20.0);
  const double large_shape_gamma = opts.gamma.value_or(400.0);

  switch (name) {
    case 'a': {
      const std::vector<std::size_t> sizes = scenario_shape(opts.k_clusters);
      const double alpha = opts.alpha.value_or(0.0);
      const auto tau = static_cast<std::uint32_t>(sizes.front());
      for (std::uint32_t rep = 0; rep < opts.reps; ++rep) {
        cells.push_back(Cell{0, format_parameter("K", opts.k_clusters, 0), rep, {}, {}});
      }
      body = [=, &opts](Cell& cell) {
        SimConfig config;
        config.cluster_sizes = sizes;
        config.alpha = alpha;
        config.seed = Rng::derive(opts.seed, stream_id('a', 0, cell.rep)).next_u64();
        const SimulatedDataset data = simulate_dataset(config);
        std::tie(cell.standard, cell.greedy) =
            run_both_variants(data, tau, small_shape_gamma, opts.threshold);
      };
      break;
    }
    case 'b': {
      const std::vector<std::size_t> sizes = scenario_shape(opts.k_clusters);
      const auto tau = static_cast<std::uint32_t>(sizes.front());
      std::vector<double> alphas = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5};
      if (opts.alpha) alphas = {*opts.alpha};
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        for (std::uint32_t rep = 0; rep < opts.reps; ++rep) {
          cells.push_back(Cell{a, format_parameter("alpha", alphas[a], 2), rep, {}, {}});
        }
      }
      body = [=, &opts](Cell& cell) {
        SimConfig config;
        config.cluster_sizes = sizes;
        config.alpha = alphas[cell.param_index];
        config.seed = Rng::derive(opts.seed, stream_id('b', cell.param_index, cell.rep)).next_u64();
        const SimulatedDataset data = simulate_dataset(config);
        std::tie(cell.standard, cell.greedy) =
            run_both_variants(data, tau, small_shape_gamma, opts.threshold);
      };
      break;
    }
    case 'c': {
      const std::vector<std::uint32_t> taus = {20, 30, 40, 50};
      const double alpha = opts.alpha.value_or(0.5);
      for (std::size_t t = 0; t < taus.size(); ++t) {
        for (std::uint32_t rep = 0; rep < opts.reps; ++rep) {
          cells.push_back(Cell{t, format_parameter("tau", taus[t], 0), rep, {}, {}});
        }
      }
      body = [=, &opts](Cell& cell) {
        // The dataset stream ignores the tau index: granularity varies on
        // the same data within a rep.
        Rng rng = Rng::derive(opts.seed, stream_id('c', 0, cell.rep));
        SimConfig config;
        config.cluster_sizes = draw_block_sizes(5, rng);
        config.alpha = alpha;
        config.seed = rng.next_u64();
        const SimulatedDataset data = simulate_dataset(config);
        std::tie(cell.standard, cell.greedy) =
            run_both_variants(data, taus[cell.param_index], large_shape_gamma, opts.threshold);
      };
      break;
    }
    case 'd': {
      const std::vector<std::size_t> obs_counts = {5, 10, 15, 30};
      const double alpha = opts.alpha.value_or(3.0);
      for (std::size_t n = 0; n < obs_counts.size(); ++n) {
        for (std::uint32_t rep = 0; rep < opts.reps; ++rep) {
          cells.push_back(
              Cell{n, format_parameter("N", static_cast<double>(obs_counts[n]), 0), rep, {}, {}});
        }
      }
      body = [=, &opts](Cell& cell) {
        Rng rng = Rng::derive(opts.seed, stream_id('d', cell.param_index, cell.rep));
        SimConfig config;
        config.n_obs = obs_counts[cell.param_index];
        config.cluster_sizes = draw_block_sizes(5, rng);
        config.alpha = alpha;
        config.seed = rng.next_u64();
        const SimulatedDataset data = simulate_dataset(config);
        std::tie(cell.standard, cell.greedy) =
            run_both_variants(data, 20, large_shape_gamma, opts.threshold);
      };
      break;
    }
    default:
      throw std::invalid_argument("unknown scenario (expected a, b, c or d)");
  }

  run_cells_in_parallel(cells, body);

  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.param_index, a.rep) < std::tie(b.param_index, b.rep);
  });
  std::vector<ScenarioRow> rows;
  rows.reserve(cells.size() * 2);
  std::size_t begin = 0;
  while (begin < cells.size()) {
    std::size_t end = begin;
    while (end < cells.size() && cells[end].param_index == cells[begin].param_index) ++end;
    for (const bool greedy : {false, true}) {
      for (std::size_t i = begin; i < end; ++i) {
        const Cell& cell = cells[i];
        const VariantOutcome& outcome = greedy ? cell.greedy : cell.standard;
        rows.push_back(ScenarioRow{name, greedy ? "greedy" : "standard", cell.rep,
                                   cell.parameter, outcome.score, outcome.wall_ms});
      }
    }
    begin = end;
  }
  return rows;
}

}  // namespace corecluster
