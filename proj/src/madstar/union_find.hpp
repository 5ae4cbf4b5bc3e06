#pragma once

#include <utility>
#include <vector>

namespace madstar {

// Union by size without path compression, so every union can be undone in
// LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(static_cast<std::size_t>(n));
    size_.assign(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) parent_[i] = i;
    log_.clear();
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Returns false (and logs nothing) when already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    log_.push_back(b);
    return true;
  }

  std::size_t checkpoint() const { return log_.size(); }

  void rollback(std::size_t mark) {
    while (log_.size() > mark) {
      int b = log_.back();
      log_.pop_back();
      int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> log_;
};

}  // namespace madstar
