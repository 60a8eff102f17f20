#include "corecluster/similarity.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "test_support.hpp"

namespace corecluster {
namespace {

ObservationMatrix make_obs(std::size_t n, std::size_t p, std::vector<double> values) {
  return ObservationMatrix(n, p, std::move(values));
}

TEST(PearsonAbsMatrix, EqualColumnsGivePerfectSimilarity) {
  const auto obs = make_obs(4, 2, {1, 1, 2, 2, 3, 3, 4.5, 4.5});
  const SimilarityMatrix sim = pearson_abs_matrix(obs);
  EXPECT_DOUBLE_EQ(sim(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(sim(0, 0), 1.0);
}

TEST(PearsonAbsMatrix, NegatedColumnGivesPerfectSimilarity) {
  const auto obs = make_obs(4, 2, {1, -1, 2, -2, 3, -3, 4.5, -4.5});
  EXPECT_DOUBLE_EQ(pearson_abs_matrix(obs)(0, 1), 1.0);
}

TEST(PearsonAbsMatrix, MatchesTextbookOracle) {
  const auto obs = make_obs(4, 3,
                            {0.5, 2.0, -1.0,   //
                             1.5, 1.0, 0.25,   //
                             -0.5, 3.0, 2.0,   //
                             2.5, -1.0, 0.75});
  const SimilarityMatrix sim = pearson_abs_matrix(obs);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const double expected = i == j ? 1.0 : testing::pearson_abs_oracle(obs, i, j);
      EXPECT_NEAR(sim(i, j), expected, 1e-12) << i << "," << j;
    }
  }
}

TEST(PearsonAbsMatrix, ZeroVarianceColumnContributesZero) {
  const auto obs = make_obs(3, 2, {1.0, 0.1, 2.0, 0.1, 3.0, 0.1});
  const SimilarityMatrix sim = pearson_abs_matrix(obs);
  EXPECT_DOUBLE_EQ(sim(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(sim(1, 1), 1.0);
}

TEST(PearsonAbsMatrix, RequiresTwoObservations) {
  EXPECT_THROW(pearson_abs_matrix(make_obs(1, 2, {1.0, 2.0})), std::invalid_argument);
}

TEST(PearsonAbsMatrix, ScaleAndShiftInvariant) {
  Rng rng(7);
  std::vector<double> values(20 * 3);
  for (auto& v : values) v = rng.gaussian();
  const auto obs = make_obs(20, 3, values);
  const SimilarityMatrix base = pearson_abs_matrix(obs);

  for (std::size_t i = 0; i < 20; ++i) values[i * 3] = -2.5 * values[i * 3] + 7.0;
  const SimilarityMatrix scaled = pearson_abs_matrix(make_obs(20, 3, values));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(base(i, j), scaled(i, j), 1e-9);
    }
  }
}

TEST(PearsonAbsMatrix, SparseAndDensePathsAgree) {
  Rng rng(11);
  const std::size_t n = 12, p = 5;
  std::vector<Triplet> triplets;
  std::vector<double> dense(n * p, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (rng.uniform() < 0.4) continue;  // leave implicit zeros behind
      const double value = rng.gaussian();
      dense[i * p + j] = value;
      triplets.push_back(Triplet{i, j, value});
    }
  }
  const SimilarityMatrix from_dense = pearson_abs_matrix(make_obs(n, p, dense));
  const SimilarityMatrix from_sparse =
      pearson_abs_matrix(ObservationMatrix::from_triplets(n, p, triplets));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      EXPECT_NEAR(from_dense(i, j), from_sparse(i, j), 1e-9);
    }
  }
}

TEST(SimilarityMatrix, RejectsAsymmetryAndBadValues) {
  EXPECT_THROW(SimilarityMatrix(2, {1.0, 0.5, 0.4, 1.0}), std::invalid_argument);
  EXPECT_THROW(SimilarityMatrix(2, {1.0, 1.5, 1.5, 1.0}), std::invalid_argument);
  EXPECT_THROW(SimilarityMatrix(2, {1.0, 0.5, 0.5}), std::invalid_argument);
}

TEST(BuildGraph, IdentityMatrixGivesEdgelessGraph) {
  const SimilarityMatrix sim(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  const WeightedGraph graph = build_graph(sim);
  EXPECT_EQ(graph.node_count(), 3u);
  EXPECT_EQ(graph.edge_count(), 0u);
}

TEST(BuildGraph, CompleteSmallCase) {
  const SimilarityMatrix sim(3, {1, 0.8, 0.8, 0.8, 1, 0.8, 0.8, 0.8, 1});
  const WeightedGraph graph = build_graph(sim);
  ASSERT_EQ(graph.edge_count(), 3u);
  for (const auto& e : graph.edges()) EXPECT_DOUBLE_EQ(e.weight, 0.8);
}

TEST(BuildGraph, ThresholdMatchesExhaustivePairFilter) {
  Rng rng(3);
  const SimilarityMatrix sim = testing::random_similarity(rng, 10);
  const WeightedGraph graph = build_graph(sim, 0.5);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = i + 1; j < 10; ++j) {
      if (sim(i, j) > 0.5) ++expected;
    }
  }
  EXPECT_EQ(graph.edge_count(), expected);
  for (const auto& e : graph.edges()) {
    EXPECT_GT(e.weight, 0.5);
    EXPECT_DOUBLE_EQ(e.weight, sim(e.u, e.v));
  }
}

TEST(BuildGraph, RaisingThresholdNestsEdgeSets) {
  Rng rng(5);
  const SimilarityMatrix sim = testing::random_similarity(rng, 12);
  std::size_t previous = build_graph(sim, 0.0).edge_count();
  for (const double threshold : {0.2, 0.4, 0.6, 0.8}) {
    const WeightedGraph graph = build_graph(sim, threshold);
    EXPECT_LE(graph.edge_count(), previous);
    for (const auto& e : graph.edges()) {
      EXPECT_GT(e.weight, threshold);  // every kept edge would survive lower thresholds too
    }
    previous = graph.edge_count();
  }
}

TEST(BuildGraph, RejectsBadThreshold) {
  const SimilarityMatrix sim(2, {1, 0.5, 0.5, 1});
  EXPECT_THROW(build_graph(sim, 1.0), std::invalid_argument);
  EXPECT_THROW(build_graph(sim, -0.1), std::invalid_argument);
}

}  // namespace
}  // namespace corecluster
