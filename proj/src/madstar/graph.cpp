#include "madstar/graph.hpp"

#include <algorithm>
#include <deque>

#include "madstar/errors.hpp"

namespace madstar {

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m()));
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::name(Vertex v) const {
  if (v >= 0 && static_cast<std::size_t>(v) < names_.size()) return names_[v];
  return std::to_string(v);
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

GraphBuilder::GraphBuilder(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {}

Vertex GraphBuilder::add_vertex() {
  adj_.emplace_back();
  return static_cast<Vertex>(adj_.size() - 1);
}

Vertex GraphBuilder::add_vertices(int count) {
  auto first = static_cast<Vertex>(adj_.size());
  adj_.resize(adj_.size() + static_cast<std::size_t>(count));
  return first;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = adj_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

bool GraphBuilder::try_add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") references a vertex outside 0.." + std::to_string(n() - 1));
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  return true;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (!try_add_edge(u, v))
    throw ValidationError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
}

Graph GraphBuilder::build() const {
  Graph g;
  g.offsets_.assign(adj_.size() + 1, 0);
  for (std::size_t v = 0; v < adj_.size(); ++v)
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::int64_t>(adj_[v].size());
  g.adj_.reserve(static_cast<std::size_t>(g.offsets_.back()));
  for (const auto& list : adj_) {
    std::vector<Vertex> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    g.adj_.insert(g.adj_.end(), sorted.begin(), sorted.end());
  }
  if (names_.size() == adj_.size()) g.names_ = names_;
  return g;
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph s;
  s.from_parent.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (!g.valid(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
    s.from_parent[v] = static_cast<Vertex>(s.to_parent.size());
    s.to_parent.push_back(v);
  }
  GraphBuilder b(static_cast<int>(s.to_parent.size()));
  for (Vertex v : s.to_parent)
    for (Vertex u : g.neighbors(v))
      if (v < u && s.from_parent[u] >= 0) b.add_edge(s.from_parent[v], s.from_parent[u]);
  if (g.has_names()) {
    std::vector<std::string> names;
    for (Vertex v : s.to_parent) names.push_back(g.name(v));
    b.set_names(std::move(names));
  }
  s.graph = b.build();
  return s;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : drop) {
    if (!g.valid(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::int64_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : vertices) {
    if (!g.valid(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  std::int64_t twice = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!in[v]) continue;
    for (Vertex u : g.neighbors(v)) twice += in[u];
  }
  return twice / 2;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] >= max_depth) continue;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] != kUnreachable) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

std::vector<Vertex> ball2(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v)) {
    out.push_back(u);
    for (Vertex w : g.neighbors(u))
      if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> component_ids(const Graph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

std::optional<int> girth(const Graph& g) {
  int best = kUnreachable;
  std::vector<int> dist(static_cast<std::size_t>(g.n()));
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()));
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] == kUnreachable) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

bool is_forest(const Graph& g) {
  int components = 0;
  component_ids(g, &components);
  return g.m() == static_cast<std::int64_t>(g.n()) - components;
}

}  // namespace madstar
