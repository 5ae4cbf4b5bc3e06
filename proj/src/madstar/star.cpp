#include "madstar/star.hpp"

#include <algorithm>
#include <set>

#include "madstar/errors.hpp"

namespace madstar {

Coloring make_coloring(std::vector<int> colors) {
  Coloring c;
  c.palette_size = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  c.colors = std::move(colors);
  return c;
}

StarCheck check_star_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != static_cast<std::size_t>(g.n()))
    throw ValidationError("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                          std::to_string(g.n()) + " vertices");
  for (Vertex v = 0; v < g.n(); ++v)
    if (c.colors[v] < 0) throw ValidationError("vertex " + std::to_string(v) + " is uncolored");
  const auto& col = c.colors;
  auto edges = g.edges();
  for (auto [u, v] : edges)
    if (col[u] == col[v]) return {false, {u, v}};
  for (auto [a, b] : edges) {
    for (auto [u, v] : {Edge{a, b}, Edge{b, a}}) {
      for (Vertex x : g.neighbors(u)) {
        if (x == v || col[x] != col[v]) continue;
        for (Vertex y : g.neighbors(v))
          if (y != u && col[y] == col[u]) return {false, {x, u, v, y}};
      }
    }
  }
  return {};
}

bool star_extension_ok(const Graph& g, std::span<const int> colors, Vertex v) {
  const int cv = colors[v];
  for (Vertex a : g.neighbors(v))
    if (colors[a] == cv) return false;
  for (Vertex a : g.neighbors(v)) {
    const int ca = colors[a];
    if (ca < 0) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b == v || colors[b] != cv) continue;
      // v-a-b is a bicolored P3; any extension at either end closes a P4.
      for (Vertex x : g.neighbors(b))
        if (x != a && colors[x] == ca) return false;
      for (Vertex y : g.neighbors(v))
        if (y != a && colors[y] == ca) return false;
    }
  }
  return true;
}

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    order.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      queue.emplace(--deg[u], u);
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

namespace {

class StarSearch {
 public:
  StarSearch(const Graph& g, int k, const std::optional<std::chrono::steady_clock::time_point>& deadline)
      : g_(g), k_(k), deadline_(deadline), order_(degeneracy_order(g)), colors_(static_cast<std::size_t>(g.n()), -1) {}

  bool run() { return descend(0, -1); }
  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool descend(std::size_t i, int max_used) {
    if (i == order_.size()) return true;
    if ((++nodes_ & 1023) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_) timed_out_ = true;
    if (timed_out_) return false;
    Vertex v = order_[i];
    int top = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
      colors_[v] = c;
      if (star_extension_ok(g_, colors_, v) && descend(i + 1, std::max(max_used, c))) return true;
      if (timed_out_) break;
    }
    colors_[v] = -1;
    return false;
  }

  const Graph& g_;
  int k_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<Vertex> order_;
  std::vector<int> colors_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

StarResult star_chromatic_number(const Graph& g, const StarSearchOptions& options) {
  if (options.limit < 0) throw UsageError("limit must be at least 1");
  if (!options.force && g.n() > options.max_vertices)
    throw UsageError("exact search refused for n = " + std::to_string(g.n()) + " > " +
                     std::to_string(options.max_vertices) + " (use --force)");
  StarResult result;
  if (g.n() == 0) return result;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (options.timeout) deadline = std::chrono::steady_clock::now() + *options.timeout;
  int limit = options.limit == 0 ? g.n() : options.limit;
  for (int k = g.m() > 0 ? 2 : 1; k <= limit; ++k) {
    StarSearch search(g, k, deadline);
    bool found = search.run();
    result.nodes += search.nodes();
    if (search.timed_out()) {
      result.status = StarStatus::Timeout;
      return result;
    }
    if (found) {
      result.chi = k;
      result.coloring = make_coloring(search.colors());
      result.status = StarStatus::Found;
      return result;
    }
  }
  result.status = StarStatus::ExceedsLimit;
  return result;
}

Coloring greedy_star_coloring(const Graph& g, std::span<const Vertex> order) {
  std::vector<char> hit(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : order) {
    if (!g.valid(v) || hit[v]) throw ValidationError("order is not a permutation of the vertices");
    hit[v] = 1;
  }
  if (order.size() != static_cast<std::size_t>(g.n())) throw ValidationError("order is not a permutation of the vertices");
  std::vector<int> colors(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v : order) {
    for (int c = 0;; ++c) {
      colors[v] = c;
      if (star_extension_ok(g, colors, v)) break;
    }
  }
  Coloring out = make_coloring(std::move(colors));
  if (!check_star_coloring(g, out).ok) throw Error("greedy produced an invalid star coloring");
  return out;
}

}  // namespace madstar
