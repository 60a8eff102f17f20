#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace corecluster {

// Disjoint-set forest with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(std::uint32_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Joins the sets holding a and b; returns the surviving root.
  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

  bool connected(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }

  // Size of the set holding x.
  std::uint32_t set_size(std::uint32_t x) { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace corecluster
