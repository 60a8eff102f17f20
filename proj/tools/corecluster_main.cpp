// Command-line driver: cluster detection, synthetic benchmark scenarios and
// score evaluation over the file formats documented in the README.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "corecluster/centrality.hpp"
#include "corecluster/core_clustering.hpp"
#include "corecluster/evaluation.hpp"
#include "corecluster/io.hpp"
#include "corecluster/similarity.hpp"
#include "corecluster/spanning.hpp"
#include "corecluster/synthgen.hpp"

namespace {

using namespace corecluster;

std::string default_centers_path(const std::string& output) {
  std::filesystem::path path(output);
  const std::string ext = path.has_extension() ? path.extension().string() : ".csv";
  path.replace_extension();
  return path.string() + "_centers" + ext;
}

std::string sibling_path(const std::string& output, const char* ext) {
  std::filesystem::path path(output);
  path.replace_extension(ext);
  return path.string();
}

void print_score_rows(std::ostream& out, const CoreClusterSet& clusters,
                      std::optional<double> external, std::optional<double> mean_ic) {
  char buffer[40];
  for (const auto& cluster : clusters.clusters) {
    out << "cluster," << cluster.id << ',' << cluster.members.size() << ',';
    if (cluster.ic_score) {
      std::snprintf(buffer, sizeof(buffer), "%.6f", *cluster.ic_score);
      out << buffer;
    }
    out << '\n';
  }
  out << "summary,K=" << clusters.size();
  if (external) {
    std::snprintf(buffer, sizeof(buffer), "%.6f", *external);
    out << ",S=" << buffer;
  }
  if (mean_ic) {
    std::snprintf(buffer, sizeof(buffer), "%.6f", *mean_ic);
    out << ",mean_IC=" << buffer;
  }
  out << '\n';
}

int run_cluster(const std::string& input, const std::string& input_kind, std::uint32_t tau,
                bool greedy, double gamma, double threshold, const std::string& output,
                std::string centers_path, const std::string& export_format,
                const std::string& dump_similarity) {
  std::optional<SimilarityMatrix> sim;
  if (input_kind == "sim") {
    sim = io::read_similarity_csv(input);
  } else if (input_kind == "sparse") {
    sim = pearson_abs_matrix(io::read_observation_triplets(input));
  } else {
    sim = pearson_abs_matrix(io::read_observation_csv(input));
  }
  const WeightedGraph graph = build_graph(*sim, threshold);

  LabelArray labels;
  if (greedy) {
    labels = core_clustering_greedy(graph, ClusterParams{tau, gamma});
  } else {
    const WeightedGraph forest = maximum_spanning_tree(graph);
    labels = core_clustering(forest, ClusterParams{tau, gamma});
  }

  CoreClusterSet clusters = cluster_centers(graph, labels);
  std::optional<double> mean_ic;
  if (!clusters.empty()) {
    const InternalScore ic = internal_score(*sim, labels);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      clusters.clusters[c].ic_score = ic.per_cluster[c];
    }
    mean_ic = ic.mean;
  }
  for (const auto& cluster : clusters.clusters) {
    if (!cluster.center) {
      std::cerr << "warning: cluster " << cluster.id
                << " has no center (induced subgraph is disconnected)\n";
    }
  }

  // All validation is done; only now touch the filesystem.
  io::write_labels_csv(labels, clusters, graph.node_names(), output);
  if (centers_path.empty()) centers_path = default_centers_path(output);
  io::write_centers_csv(clusters, graph.node_names(), centers_path);
  if (!dump_similarity.empty()) io::write_similarity_csv(*sim, dump_similarity);
  if (export_format == "dot") {
    io::write_dot(graph, &labels, sibling_path(output, "dot"));
  } else if (export_format == "graphml") {
    io::write_graphml(graph, &labels, sibling_path(output, "graphml"));
  }

  print_score_rows(std::cout, clusters, std::nullopt, mean_ic);
  return 0;
}

int run_simulate(char scenario, std::uint32_t reps, std::uint64_t seed, std::uint32_t k,
                 std::optional<double> alpha, double threshold, std::optional<double> gamma,
                 bool timing, const std::string& output) {
  ScenarioOptions opts;
  opts.reps = reps;
  opts.seed = seed;
  opts.k_clusters = k;
  opts.alpha = alpha;
  opts.threshold = threshold;
  opts.gamma = gamma;
  const std::vector<ScenarioRow> rows = run_scenario(scenario, opts);
  io::write_scenario_csv(rows, timing, output);
  return 0;
}

int run_evaluate(const std::string& labels_path, const std::string& truth_path,
                 const std::string& similarity_path, const std::string& output) {
  const LabelArray labels = io::read_labels_csv(labels_path);
  CoreClusterSet clusters = clusters_from_labels(labels);

  std::optional<double> external;
  if (!truth_path.empty()) {
    external = external_score(io::read_truth_csv(truth_path), labels);
  }
  std::optional<double> mean_ic;
  if (!similarity_path.empty() && !clusters.empty()) {
    const InternalScore ic = internal_score(io::read_similarity_csv(similarity_path), labels);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      clusters.clusters[c].ic_score = ic.per_cluster[c];
    }
    mean_ic = ic.mean;
  }

  if (output.empty()) {
    print_score_rows(std::cout, clusters, external, mean_ic);
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open " + output + " for writing");
    print_score_rows(out, clusters, external, mean_ic);
  }
  return 0;
}

int run_main(int argc, char** argv) {
  CLI::App app{"Core-cluster detection in correlation networks"};
  app.require_subcommand(1);

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Detect core clusters and their centers");
  std::string input, output, centers, export_format, dump_similarity;
  std::string input_kind = "obs";
  std::uint32_t tau = 2;
  double gamma = 20.0;
  double threshold = 0.0;
  cluster->add_option("--input,-i", input, "Input file")->required();
  cluster->add_option("--tau,-t", tau, "Granularity: cluster sizes fall in [tau, 2*tau-1]")
      ->required();
  auto* gamma_opt = cluster->add_option(
      "--gamma,-g", gamma, "Greedy scan factor; when given, the greedy variant runs instead");
  cluster->add_option("--threshold", threshold, "Drop similarities at or below this value");
  cluster->add_option("--input-kind", input_kind, "obs (default), sim or sparse")
      ->check(CLI::IsMember({"obs", "sim", "sparse"}));
  cluster->add_option("--output,-o", output, "Label CSV path")->required();
  cluster->add_option("--centers", centers, "Centers CSV path (default <output>_centers.csv)");
  cluster->add_option("--export", export_format, "Also write the graph as dot or graphml")
      ->check(CLI::IsMember({"dot", "graphml"}));
  cluster->add_option("--dump-similarity", dump_similarity,
                      "Write the similarity matrix used for clustering");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run a synthetic benchmark scenario");
  std::string scenario;
  std::uint32_t reps = 30;
  std::uint64_t seed = 0;
  std::uint32_t k = 2;
  double sim_threshold = kScenarioThreshold;
  double sim_gamma = 20.0;
  double alpha_value = 0.0;
  bool timing = false;
  std::string sim_output;
  simulate->add_option("--scenario,-s", scenario, "Scenario a, b, c or d")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d"}));
  simulate->add_option("--reps,-r", reps, "Repetitions per parameter point");
  simulate->add_option("--seed", seed, "Base seed for the derived per-rep streams");
  simulate->add_option("--k", k, "Cluster count for scenarios a/b (2 or 5)")
      ->check(CLI::IsMember({"2", "5"}));
  auto* alpha_opt = simulate->add_option("--alpha", alpha_value, "Noise level override");
  simulate->add_option("--threshold", sim_threshold, "Similarity threshold for the pipeline");
  auto* sim_gamma_opt =
      simulate->add_option("--gamma", sim_gamma, "Greedy scan factor (default sized per scenario)");
  simulate->add_flag("--timing", timing, "Record wall times (breaks byte determinism)");
  simulate->add_option("--output,-o", sim_output, "Score CSV path")->required();

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score an existing label file");
  std::string labels_path, truth_path, similarity_path, eval_output;
  evaluate->add_option("--labels,-l", labels_path, "Label CSV to score")->required();
  evaluate->add_option("--truth", truth_path, "Ground-truth label CSV (enables S)");
  evaluate->add_option("--similarity", similarity_path, "Similarity CSV (enables IC)");
  evaluate->add_option("--output,-o", eval_output, "Write the summary here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (cluster->parsed()) {
    return run_cluster(input, input_kind, tau, gamma_opt->count() > 0, gamma, threshold,
                       output, centers, export_format, dump_similarity);
  }
  if (simulate->parsed()) {
    return run_simulate(scenario[0], reps, seed, k,
                        alpha_opt->count() > 0 ? std::optional<double>(alpha_value)
                                               : std::nullopt,
                        sim_threshold,
                        sim_gamma_opt->count() > 0 ? std::optional<double>(sim_gamma)
                                                   : std::nullopt,
                        timing, sim_output);
  }
  if (evaluate->parsed()) {
    return run_evaluate(labels_path, truth_path, similarity_path, eval_output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
}
