#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace madstar {

// Dinic max-flow on integer capacities. Deterministic: arcs are scanned in
// insertion order.
class MaxFlow {
 public:
  using Cap = std::int64_t;
  static constexpr Cap kInfinite = std::numeric_limits<Cap>::max() / 4;

  explicit MaxFlow(int nodes);

  void add_arc(int from, int to, Cap cap);
  // One arc pair carrying `cap` in both directions.
  void add_undirected(int a, int b, Cap cap);

  Cap solve(int source, int sink);
  // Nodes reachable from the source in the final residual network. This is
  // the inclusion-minimal source side among all minimum cuts.
  std::vector<char> source_side(int source) const;

 private:
  struct Arc {
    int to;
    Cap cap;
  };
  bool build_levels(int source, int sink);
  Cap augment(int v, int sink, Cap limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace madstar
