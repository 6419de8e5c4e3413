#ifndef SLOPECERT_SRC_INTERNAL_UTIL_HPP
#define SLOPECERT_SRC_INTERNAL_UTIL_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace slopecert::detail {

/** Plain union-find with path compression and union by size. */
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /** Returns false when x and y were already in the same class. */
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

  /** Number each class 0..k-1 by first appearance; returns the labels. */
  std::vector<int> labels(int* count_out = nullptr) {
    std::vector<int> lab(parent_.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (lab[r] < 0) lab[r] = next++;
      lab[i] = lab[r];
    }
    if (count_out) *count_out = next;
    return lab;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/** Union-find tracking a Z/2 relation to the class representative.
 *  unite(x, y, r) asserts parity(x) xor parity(y) == r; returns false on
 *  contradiction with the existing relation. */
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), rank_(n, 0), rel_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    if (parent_[x] == x) return x;
    std::size_t root = find(parent_[x]);
    rel_[x] ^= rel_[parent_[x]];
    parent_[x] = root;
    return root;
  }

  /** Parity of x relative to its class representative. */
  int parity(std::size_t x) {
    find(x);
    return rel_[x];
  }

  bool unite(std::size_t x, std::size_t y, int r) {
    std::size_t rx = find(x), ry = find(y);
    int want = (rel_[x] ^ rel_[y] ^ (r & 1));
    if (rx == ry) return want == 0;
    if (rank_[rx] < rank_[ry]) {
      std::swap(rx, ry);
    }
    parent_[ry] = rx;
    rel_[ry] = want;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
  std::vector<int> rel_;
};

}  // namespace slopecert::detail

#endif  // SLOPECERT_SRC_INTERNAL_UTIL_HPP
