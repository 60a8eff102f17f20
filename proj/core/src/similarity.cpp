#include "corecluster/similarity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace corecluster {

ObservationMatrix::ObservationMatrix(std::size_t n, std::size_t p, std::vector<double> values,
                                     std::vector<std::string> variable_names)
    : n_(n), p_(p), values_(std::move(values)), names_(std::move(variable_names)) {
  if (n_ == 0 || p_ == 0) throw std::invalid_argument("observation matrix must be non-empty");
  if (values_.size() != n_ * p_) {
    throw std::invalid_argument("observation value count does not match n x p");
  }
  if (!names_.empty() && names_.size() != p_) {
    throw std::invalid_argument("variable name count does not match variable count");
  }
}

ObservationMatrix ObservationMatrix::from_triplets(std::size_t n, std::size_t p,
                                                   const std::vector<Triplet>& triplets,
                                                   std::vector<std::string> variable_names) {
  std::vector<double> dense(n * p, 0.0);
  for (const auto& t : triplets) {
    if (t.row >= n || t.col >= p) throw std::invalid_argument("triplet index out of range");
    dense[t.row * p + t.col] = t.value;
  }
  return ObservationMatrix(n, p, std::move(dense), std::move(variable_names));
}

SimilarityMatrix::SimilarityMatrix(std::size_t p, std::vector<double> values,
                                   std::vector<std::string> variable_names)
    : p_(p), s_(std::move(values)), names_(std::move(variable_names)) {
  if (p_ == 0) throw std::invalid_argument("similarity matrix must be non-empty");
  if (s_.size() != p_ * p_) throw std::invalid_argument("similarity matrix is not square");
  if (!names_.empty() && names_.size() != p_) {
    throw std::invalid_argument("variable name count does not match matrix size");
  }
  constexpr double kSymmetryTol = 1e-9;
  for (std::size_t i = 0; i < p_; ++i) {
    for (std::size_t j = i + 1; j < p_; ++j) {
      const double a = s_[i * p_ + j];
      const double b = s_[j * p_ + i];
      if (!(std::abs(a - b) <= kSymmetryTol)) {
        throw std::invalid_argument("similarity matrix is not symmetric");
      }
      if (!(a >= -kSymmetryTol) || !(a <= 1.0 + kSymmetryTol)) {
        throw std::invalid_argument("similarity value outside [0,1]");
      }
      const double s = std::clamp(a, 0.0, 1.0);
      s_[i * p_ + j] = s;
      s_[j * p_ + i] = s;
    }
    s_[i * p_ + i] = 1.0;
  }
}

double SimilarityMatrix::max_off_diagonal() const {
  double best = 0.0;
  for (std::size_t i = 0; i < p_; ++i) {
    for (std::size_t j = i + 1; j < p_; ++j) {
      best = std::max(best, s_[i * p_ + j]);
    }
  }
  return best;
}

namespace {

// Column-major z-scores: z_j = (x_j - mean_j) / ||x_j - mean_j||, so each
// pair costs one dot product. Columns with zero variance (max == min, an
// exact test) are flagged instead of normalized.
struct NormalizedColumns {
  std::vector<double> z;          // p columns of length n, column-major
  std::vector<char> is_constant;  // per column
};

NormalizedColumns normalize_columns(const ObservationMatrix& obs) {
  const std::size_t n = obs.observation_count();
  const std::size_t p = obs.variable_count();
  NormalizedColumns out;
  out.z.assign(n * p, 0.0);
  out.is_constant.assign(p, 0);
  for (std::size_t j = 0; j < p; ++j) {
    double lo = obs.at(0, j);
    double hi = lo;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = obs.at(i, j);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      sum += x;
    }
    if (lo == hi) {
      out.is_constant[j] = 1;
      continue;
    }
    const double mean = sum / static_cast<double>(n);
    double norm_sq = 0.0;
    double* col = out.z.data() + j * n;
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = obs.at(i, j) - mean;
      norm_sq += col[i] * col[i];
    }
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < n; ++i) col[i] *= inv_norm;
  }
  return out;
}

void fill_row(const NormalizedColumns& cols, std::size_t n, std::size_t p, std::size_t i,
              std::vector<double>& s) {
  const double* zi = cols.z.data() + i * n;
  for (std::size_t j = i + 1; j < p; ++j) {
    double value = 0.0;
    if (!cols.is_constant[i] && !cols.is_constant[j]) {
      const double* zj = cols.z.data() + j * n;
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += zi[k] * zj[k];
      value = std::min(std::abs(dot), 1.0);
    }
    s[i * p + j] = value;
    s[j * p + i] = value;
  }
}

}  // namespace

SimilarityMatrix pearson_abs_matrix(const ObservationMatrix& obs) {
  const std::size_t n = obs.observation_count();
  const std::size_t p = obs.variable_count();
  if (n < 2) throw std::invalid_argument("correlation requires at least two observations");

  const NormalizedColumns cols = normalize_columns(obs);
  std::vector<double> s(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) s[i * p + i] = 1.0;

  // Rows are independent work units with disjoint writes, so concurrent
  // execution cannot change the result.
  const std::size_t pair_work = p * p / 2 * std::max<std::size_t>(n, 1);
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers = (pair_work > 16'000'000 && hw > 1) ? hw : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < p; ++i) fill_row(cols, n, p, i, s);
  } else {
    std::atomic<std::size_t> next_row{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next_row.fetch_add(1); i < p; i = next_row.fetch_add(1)) {
          fill_row(cols, n, p, i, s);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return SimilarityMatrix(p, std::move(s), obs.variable_names());
}

WeightedGraph build_graph(const SimilarityMatrix& sim, double threshold) {
  if (!(threshold >= 0.0) || threshold >= 1.0) {
    throw std::invalid_argument("threshold must lie in [0,1)");
  }
  const std::size_t p = sim.variable_count();
  if (p > std::numeric_limits<NodeId>::max()) {
    throw std::invalid_argument("too many variables for graph node ids");
  }
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const double s = sim(i, j);
      if (s > threshold) {
        edges.push_back(WeightedEdge{static_cast<NodeId>(i), static_cast<NodeId>(j), s});
      }
    }
  }
  return WeightedGraph(static_cast<NodeId>(p), std::move(edges), sim.variable_names());
}

}  // namespace corecluster
