#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corecluster/graph.hpp"

namespace corecluster {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

// n observations of p variables, dense row-major storage.
class ObservationMatrix {
 public:
  ObservationMatrix(std::size_t n, std::size_t p, std::vector<double> values,
                    std::vector<std::string> variable_names = {});

  // Materializes triplet-sparse data (implicit zeros elsewhere) into the
  // dense form, so the sparse path shares the dense correlation routine.
  static ObservationMatrix from_triplets(std::size_t n, std::size_t p,
                                         const std::vector<Triplet>& triplets,
                                         std::vector<std::string> variable_names = {});

  std::size_t observation_count() const { return n_; }
  std::size_t variable_count() const { return p_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * p_ + j]; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::string>& variable_names() const { return names_; }

 private:
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<double> values_;
  std::vector<std::string> names_;
};

// Symmetric p x p matrix of absolute Pearson correlations in [0,1] with a
// unit diagonal. Symmetry is exact: each unordered pair holds one value.
class SimilarityMatrix {
 public:
  // Validates shape and symmetry (within 1e-9), then stores the upper
  // triangle mirrored exactly and forces the diagonal to 1.
  SimilarityMatrix(std::size_t p, std::vector<double> values,
                   std::vector<std::string> variable_names = {});

  std::size_t variable_count() const { return p_; }
  double operator()(std::size_t i, std::size_t j) const { return s_[i * p_ + j]; }
  const std::vector<double>& values() const { return s_; }
  const std::vector<std::string>& variable_names() const { return names_; }

  // Largest similarity over distinct pairs; 0 when p < 2.
  double max_off_diagonal() const;

 private:
  std::size_t p_ = 0;
  std::vector<double> s_;
  std::vector<std::string> names_;
};

// s_ij = |Pearson(column i, column j)|, s_ii = 1. Columns with zero variance
// contribute similarity 0 (no connection) instead of NaN. Requires at least
// two observations. Pair blocks may be computed concurrently; the result is
// identical either way since every cell has exactly one writer.
SimilarityMatrix pearson_abs_matrix(const ObservationMatrix& obs);

// One edge per unordered pair with s_ij strictly above the threshold
// (default 0, so only zero similarities are dropped). Threshold in [0,1).
WeightedGraph build_graph(const SimilarityMatrix& sim, double threshold = 0.0);

}  // namespace corecluster
