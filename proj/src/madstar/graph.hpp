#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace madstar {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph in compressed adjacency form. Immutable once built;
// GraphBuilder is the only way to create one with edges.
class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::int64_t m() const { return static_cast<std::int64_t>(adj_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(Vertex u, Vertex v) const;
  bool valid(Vertex v) const { return v >= 0 && v < n(); }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Input labels, if the graph was parsed from a labelled format.
  bool has_names() const { return !names_.empty(); }
  std::string name(Vertex v) const;
  const std::vector<std::string>& names() const { return names_; }

  int max_degree() const;

 private:
  friend class GraphBuilder;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::string> names_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0);

  Vertex add_vertex();
  Vertex add_vertices(int count);  // returns the first new id
  // Throws ValidationError on self-loops, out-of-range ids and duplicates.
  void add_edge(Vertex u, Vertex v);
  // Same checks, but returns false instead of throwing on a duplicate.
  bool try_add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  void set_names(std::vector<std::string> names) { names_ = std::move(names); }

  int n() const { return static_cast<int>(adj_.size()); }
  Graph build() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> names_;
};

Graph graph_from_edges(int n, std::span<const Edge> edges);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;     // new id -> old id
  std::vector<Vertex> from_parent;   // old id -> new id, -1 when dropped
};

// Induced subgraph on `keep`; new ids follow increasing old ids.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> drop);

std::int64_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices);

constexpr int kUnreachable = std::numeric_limits<int>::max();

std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth = kUnreachable);
// All vertices at distance 1 or 2 from v, sorted.
std::vector<Vertex> ball2(const Graph& g, Vertex v);
std::vector<int> component_ids(const Graph& g, int* count = nullptr);

// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

bool is_forest(const Graph& g);

}  // namespace madstar
