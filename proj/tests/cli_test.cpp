// End-to-end checks of the command-line driver, run as a child process.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "gtest/gtest.h"

namespace {

const char* kCli = CORECLUSTER_CLI_PATH;

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "corecluster_cli_" + name;
}

int run_cli(const std::string& args) {
  const std::string command = std::string(kCli) + " " + args + " >/dev/null 2>&1";
  return std::system(command.c_str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string six_node_similarity() {
  return
      "v0,v1,v2,v3,v4,v5\n"
      "1,0.9,0.8,0.1,0.1,0.1\n"
      "0.9,1,0.85,0.1,0.1,0.1\n"
      "0.8,0.85,1,0.1,0.1,0.1\n"
      "0.1,0.1,0.1,1,0.9,0.8\n"
      "0.1,0.1,0.1,0.9,1,0.85\n"
      "0.1,0.1,0.1,0.8,0.85,1\n";
}

TEST(CliCluster, SimilarityInputProducesWindowedClusters) {
  const std::string input = temp_path("sim6.csv");
  const std::string output = temp_path("labels6.csv");
  write_file(input, six_node_similarity());
  ASSERT_EQ(run_cli("cluster -i " + input + " --input-kind sim --tau 3 -o " + output), 0);

  std::ifstream labels(output);
  std::string line;
  std::getline(labels, line);
  EXPECT_EQ(line, "node_id,name,label,is_center");
  std::map<int, std::size_t> sizes;
  int rows = 0;
  while (std::getline(labels, line)) {
    ++rows;
    const auto label_pos = line.find(',', line.find(',') + 1) + 1;
    const int label = std::stoi(line.substr(label_pos));
    if (label > 0) ++sizes[label];
  }
  EXPECT_EQ(rows, 6);
  for (const auto& [label, s] : sizes) {
    EXPECT_GE(s, 3u);
    EXPECT_LE(s, 5u);
  }
  EXPECT_TRUE(std::filesystem::exists(temp_path("labels6_centers.csv")));
}

TEST(CliCluster, AsymmetricInputFailsWithoutOutputs) {
  const std::string input = temp_path("asym.csv");
  const std::string output = temp_path("labels_asym.csv");
  write_file(input, "1,0.5\n0.1,1\n");
  EXPECT_NE(run_cli("cluster -i " + input + " --input-kind sim --tau 2 -o " + output), 0);
  EXPECT_FALSE(std::filesystem::exists(output));
}

TEST(CliCluster, InvalidTauFails) {
  const std::string input = temp_path("sim_tau.csv");
  write_file(input, six_node_similarity());
  EXPECT_NE(run_cli("cluster -i " + input + " --input-kind sim --tau 1 -o " +
                    temp_path("labels_tau.csv")),
            0);
  EXPECT_FALSE(std::filesystem::exists(temp_path("labels_tau.csv")));
}

TEST(CliCluster, ObservationPipelineWithExports) {
  // two noiseless blocks of three identical columns each
  std::string csv = "a1,a2,a3,b1,b2,b3\n";
  unsigned state = 12345;
  for (int i = 0; i < 40; ++i) {
    state = state * 1103515245 + 12345;
    const double x = (state >> 16 & 0x7fff) / 32768.0 - 0.5;
    state = state * 1103515245 + 12345;
    const double y = (state >> 16 & 0x7fff) / 32768.0 - 0.5;
    char row[160];
    std::snprintf(row, sizeof(row), "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", x, x, x, y, y, y);
    csv += row;
  }
  const std::string input = temp_path("obs.csv");
  const std::string output = temp_path("labels_obs.csv");
  write_file(input, csv);
  ASSERT_EQ(run_cli("cluster -i " + input + " --tau 3 --threshold 0.45 -o " + output +
                    " --export dot --dump-similarity " + temp_path("obs_sim.csv")),
            0);
  EXPECT_TRUE(std::filesystem::exists(output));
  EXPECT_TRUE(std::filesystem::exists(temp_path("labels_obs.dot")));
  EXPECT_TRUE(std::filesystem::exists(temp_path("obs_sim.csv")));

  const std::string labels = read_file(output);
  EXPECT_NE(labels.find("0,a1,1,"), std::string::npos);
  EXPECT_NE(labels.find("3,b1,2,"), std::string::npos);
}

TEST(CliCluster, SparseTripletInputMatchesDense) {
  // the same two-block data as dense CSV and as triplets with implicit zeros
  std::string csv = "a1,a2,b1,b2\n";
  std::string triplets;
  unsigned state = 999;
  for (int i = 0; i < 30; ++i) {
    state = state * 1103515245 + 12345;
    const double x = (state >> 16 & 0x7fff) / 32768.0 + 0.25;  // keep values nonzero
    state = state * 1103515245 + 12345;
    const double y = (state >> 16 & 0x7fff) / 32768.0 + 0.25;
    char row[128];
    std::snprintf(row, sizeof(row), "%.6f,%.6f,%.6f,%.6f\n", x, x, y, y);
    csv += row;
    for (int j = 0; j < 4; ++j) {
      std::snprintf(row, sizeof(row), "%d,%d,%.6f\n", i, j, j < 2 ? x : y);
      triplets += row;
    }
  }
  const std::string dense_in = temp_path("pair_dense.csv");
  const std::string sparse_in = temp_path("pair_sparse.triplets");
  write_file(dense_in, csv);
  write_file(sparse_in, triplets);

  const std::string dense_out = temp_path("pair_dense_labels.csv");
  const std::string sparse_out = temp_path("pair_sparse_labels.csv");
  ASSERT_EQ(run_cli("cluster -i " + dense_in + " --tau 2 --threshold 0.45 -o " + dense_out), 0);
  ASSERT_EQ(run_cli("cluster -i " + sparse_in + " --input-kind sparse --tau 2 --threshold 0.45 -o " +
                    sparse_out),
            0);
  // same clustering; the sparse path has no header so names fall back to v<i>
  const std::string dense_labels = read_file(dense_out);
  EXPECT_NE(dense_labels.find("0,a1,1,"), std::string::npos);
  EXPECT_NE(dense_labels.find("2,b1,2,"), std::string::npos);
  const std::string sparse_labels = read_file(sparse_out);
  EXPECT_NE(sparse_labels.find("0,v0,1,"), std::string::npos);
  EXPECT_NE(sparse_labels.find("2,v2,2,"), std::string::npos);
}

TEST(CliCluster, GammaFlagSwitchesToGreedy) {
  const std::string input = temp_path("greedy_sim.csv");
  write_file(input, six_node_similarity());
  const std::string output = temp_path("greedy_labels.csv");
  // budget floor(0.5 * 3) = 1: only the heaviest edge is scanned, nothing
  // reaches the tau=3 window, so all labels stay 0
  ASSERT_EQ(run_cli("cluster -i " + input + " --input-kind sim --tau 3 --gamma 0.5 -o " + output),
            0);
  const std::string labels = read_file(output);
  for (int node = 0; node < 6; ++node) {
    EXPECT_NE(labels.find(std::to_string(node) + ",v" + std::to_string(node) + ",0,0"),
              std::string::npos);
  }
}

TEST(CliSimulate, RowCountAndDeterminism) {
  const std::string out_a = temp_path("scores_a.csv");
  const std::string out_b = temp_path("scores_b.csv");
  ASSERT_EQ(run_cli("simulate -s a -r 3 --seed 7 -o " + out_a), 0);
  ASSERT_EQ(run_cli("simulate -s a -r 3 --seed 7 -o " + out_b), 0);

  const std::string a = read_file(out_a);
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 7);  // header + 2 variants x 3 reps
  EXPECT_EQ(a, read_file(out_b));                      // byte-identical reruns
}

TEST(CliSimulate, UnknownScenarioFails) {
  EXPECT_NE(run_cli("simulate -s q -r 1 -o " + temp_path("scores_q.csv")), 0);
  EXPECT_FALSE(std::filesystem::exists(temp_path("scores_q.csv")));
}

TEST(CliEvaluate, ScoresLabelFiles) {
  const std::string labels = temp_path("eval_labels.csv");
  write_file(labels,
             "node_id,name,label,is_center\n0,v0,1,1\n1,v1,1,0\n2,v2,2,1\n3,v3,2,0\n");
  const std::string summary = temp_path("eval_out.csv");
  ASSERT_EQ(run_cli("evaluate -l " + labels + " --truth " + labels + " -o " + summary), 0);
  const std::string text = read_file(summary);
  EXPECT_NE(text.find("summary,K=2,S=1.000000"), std::string::npos);

  // crafted straddling prediction scores 1/2
  const std::string half = temp_path("eval_half.csv");
  write_file(half, "node_id,name,label,is_center\n0,v0,1,0\n1,v1,1,0\n2,v2,0,0\n3,v3,0,0\n");
  const std::string summary_half = temp_path("eval_half_out.csv");
  ASSERT_EQ(run_cli("evaluate -l " + half + " --truth " + labels + " -o " + summary_half), 0);
  EXPECT_NE(read_file(summary_half).find("S=0.500000"), std::string::npos);
}

TEST(CliEvaluate, SimilarityOnlyEmitsIcRows) {
  const std::string labels = temp_path("ic_labels.csv");
  write_file(labels, "node_id,name,label,is_center\n0,v0,1,0\n1,v1,1,0\n");
  const std::string sim = temp_path("ic_sim.csv");
  write_file(sim, "1,0.8\n0.8,1\n");
  const std::string out = temp_path("ic_out.csv");
  ASSERT_EQ(run_cli("evaluate -l " + labels + " --similarity " + sim + " -o " + out), 0);
  const std::string text = read_file(out);
  EXPECT_NE(text.find("cluster,1,2,1.000000"), std::string::npos);
  EXPECT_EQ(text.find("S="), std::string::npos);
}

TEST(CliCluster, RerunsAreByteIdentical) {
  const std::string input = temp_path("det_sim.csv");
  write_file(input, six_node_similarity());
  const std::string out1 = temp_path("det1.csv");
  const std::string out2 = temp_path("det2.csv");
  ASSERT_EQ(run_cli("cluster -i " + input + " --input-kind sim --tau 3 -o " + out1), 0);
  ASSERT_EQ(run_cli("cluster -i " + input + " --input-kind sim --tau 3 -o " + out2), 0);
  EXPECT_EQ(read_file(out1), read_file(out2));
}

}  // namespace
