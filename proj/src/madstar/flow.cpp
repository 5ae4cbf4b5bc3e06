#include "madstar/flow.hpp"

#include <algorithm>
#include <deque>

namespace madstar {

MaxFlow::MaxFlow(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

void MaxFlow::add_arc(int from, int to, Cap cap) {
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0});
}

void MaxFlow::add_undirected(int a, int b, Cap cap) {
  out_[a].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({b, cap});
  out_[b].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({a, cap});
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(out_.size(), -1);
  std::deque<int> queue{source};
  level_[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

MaxFlow::Cap MaxFlow::augment(int v, int sink, Cap limit) {
  if (v == sink) return limit;
  for (std::size_t& i = next_[v]; i < out_[v].size(); ++i) {
    int id = out_[v][i];
    Arc& a = arcs_[id];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    Cap pushed = augment(a.to, sink, std::min(limit, a.cap));
    if (pushed > 0) {
      a.cap -= pushed;
      arcs_[id ^ 1].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

MaxFlow::Cap MaxFlow::solve(int source, int sink) {
  Cap total = 0;
  while (build_levels(source, sink)) {
    next_.assign(out_.size(), 0);
    while (Cap pushed = augment(source, sink, kInfinite)) total += pushed;
  }
  return total;
}

std::vector<char> MaxFlow::source_side(int source) const {
  std::vector<char> seen(out_.size(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace madstar
