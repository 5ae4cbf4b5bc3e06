#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "madstar/graph.hpp"
#include "madstar/graph_io.hpp"

#ifndef MADSTAR_TEST_DATA
#define MADSTAR_TEST_DATA "tests/data"
#endif

namespace testing {

using madstar::Edge;
using madstar::Graph;
using madstar::GraphBuilder;
using madstar::Vertex;

// Test-local randomness, separate from the library's generators.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : e_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(e_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(e_); }
  std::mt19937_64& engine() { return e_; }

  Graph gnp(int n, double p) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(p)) b.add_edge(i, j);
    return b.build();
  }

  std::vector<Vertex> subset(int n, double p) {
    std::vector<Vertex> out;
    for (int v = 0; v < n; ++v)
      if (coin(p)) out.push_back(v);
    return out;
  }

  // Sparse random graph: a random tree plus a few extra edges.
  Graph sparse(int n, int extra) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(v, uniform(0, v - 1));
    for (int i = 0; i < extra * 4 && extra > 0; ++i) {
      int u = uniform(0, n - 1), v = uniform(0, n - 1);
      if (u != v && b.try_add_edge(u, v) && --extra == 0) break;
    }
    return b.build();
  }

 private:
  std::mt19937_64 e_;
};

inline std::string read_file(const std::string& name) {
  std::ifstream in(std::string(MADSTAR_TEST_DATA) + "/" + name, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph data_graph(const std::string& name) {
  std::string text = read_file(name);
  return madstar::parse_graph(text, madstar::sniff_format(text));
}

inline std::vector<Graph> atlas() { return madstar::parse_graph6_corpus(read_file("atlas7.g6")); }

inline Graph from_edges(int n, std::initializer_list<Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

// Distances by Floyd-Warshall; independent of the library's BFS.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.n();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Direct restatement of the class definitions.
inline std::string naive_class(const Graph& g, Vertex v) {
  auto deg = [&](Vertex x) { return g.degree(x); };
  auto on_pendent_triangle = [&](Vertex x) {
    if (deg(x) != 2) return false;
    Vertex a = g.neighbors(x)[0], b = g.neighbors(x)[1];
    if (!g.adjacent(a, b)) return false;
    return (deg(a) == 2 && deg(b) >= 3) || (deg(b) == 2 && deg(a) >= 3);
  };
  int tri = 0;
  for (Vertex a : g.neighbors(v))
    for (Vertex b : g.neighbors(v))
      if (a < b && g.adjacent(a, b) && deg(a) == 2 && deg(b) == 2) ++tri;
  int twos = 0;
  for (Vertex a : g.neighbors(v)) twos += deg(a) == 2;
  switch (deg(v)) {
    case 2: return on_pendent_triangle(v) ? "T" : "W2";
    case 3: return twos >= 2 ? "W3" : "V3";
    case 4: return tri == 1 ? "W4" : "V4";
    case 5: return tri == 2 ? "W5" : "V5";
    case 6: return "V6";
    default: return "Other(" + std::to_string(deg(v)) + ")";
  }
}

}  // namespace testing
