#include "madstar/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "madstar/density.hpp"
#include "madstar/errors.hpp"

namespace madstar {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below with bound 0");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error("Rng::between with empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

void add_pendent_triangle(GraphBuilder& b, Vertex at) {
  Vertex a = b.add_vertex();
  Vertex c = b.add_vertex();
  b.add_edge(at, a);
  b.add_edge(at, c);
  b.add_edge(a, c);
}

// A W5 vertex hanging from `at`: one edge up, two pendent triangles.
Vertex add_w5(GraphBuilder& b, Vertex at) {
  Vertex w = b.add_vertex();
  b.add_edge(at, w);
  add_pendent_triangle(b, w);
  add_pendent_triangle(b, w);
  return w;
}

Graph from_list(int n, std::initializer_list<Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("generator post-check failed: " + what);
}

}  // namespace

Graph gen_g5n(int n) {
  if (n < 1) throw UsageError("g5n needs n >= 1");
  const int len = 5 * n;
  GraphBuilder b(len);
  for (int i = 0; i < len; ++i) b.add_edge(i, (i + 1) % len);
  for (int i = 0; i < len; ++i) {
    int r = i % 5;
    if (r >= 1 && r <= 3) {
      add_pendent_triangle(b, i);
      add_pendent_triangle(b, i);
    }
  }
  Graph g = b.build();
  require(g.n() == 17 * n && g.m() == 23 * n, "g5n counts");
  return g;
}

Graph gen_cycle(int k) {
  if (k < 3) throw UsageError("cycle needs k >= 3");
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  return b.build();
}

Graph gen_path(int k) {
  if (k < 1) throw UsageError("path needs k >= 1");
  GraphBuilder b(k);
  for (int i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph gen_complete(int k) {
  if (k < 1) throw UsageError("complete graph needs k >= 1");
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) b.add_edge(i, j);
  return b.build();
}

Graph gen_petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph gen_flower(int k) {
  if (k < 1) throw UsageError("flower needs k >= 1");
  GraphBuilder b(1);
  for (int i = 0; i < k; ++i) add_pendent_triangle(b, 0);
  return b.build();
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw UsageError("tree needs n >= 1");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i) b.add_edge(perm[i], perm[rng.below(static_cast<std::uint64_t>(i))]);
  Graph g = b.build();
  require(g.m() == n - 1 && is_forest(g), "tree shape");
  return g;
}

Graph gen_gnp(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (n < 0 || den == 0 || num > den) throw UsageError("gnp needs n >= 0 and 0 <= p <= 1");
  Rng rng(seed);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) b.add_edge(i, j);
  return b.build();
}

Graph gen_mad_bounded(int n, const Rational& bound, std::uint64_t seed, std::int64_t max_edges) {
  if (n < 1) throw UsageError("mad-bounded needs n >= 1");
  if (bound < Rational(1)) throw UsageError("mad-bounded needs bound >= 1");
  Rng rng(seed);
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  rng.shuffle(pairs);

  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> accepted;
  auto component_of = [&](Vertex s, std::vector<char>& mark, std::vector<Vertex>& out) {
    std::vector<Vertex> stack{s};
    mark[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (Vertex u : adj[v])
        if (!mark[u]) {
          mark[u] = 1;
          stack.push_back(u);
        }
    }
  };
  for (auto [u, v] : pairs) {
    if (max_edges >= 0 && static_cast<std::int64_t>(accepted.size()) >= max_edges) break;
    std::vector<char> mark(n, 0);
    std::vector<Vertex> verts;
    component_of(u, mark, verts);
    if (!mark[v]) component_of(v, mark, verts);
    std::sort(verts.begin(), verts.end());
    std::vector<Vertex> local(n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<Vertex>(i);
    GraphBuilder b(static_cast<int>(verts.size()));
    for (Vertex x : verts)
      for (Vertex y : adj[x])
        if (x < y) b.add_edge(local[x], local[y]);
    b.add_edge(local[u], local[v]);
    if (!mad_at_most(b.build(), bound)) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
    accepted.emplace_back(u, v);
  }
  Graph g = graph_from_edges(n, accepted);
  require(mad_at_most(g, bound), "mad bound");
  return g;
}

Graph gen_config_instance(ConfigId id) {
  switch (id) {
    case ConfigId::C1:  // triangle with a pendant vertex
      return from_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    case ConfigId::C2:  // three paths of length three between 0 and 1
      return from_list(8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
    case ConfigId::C3:  // 3-vertex whose 2-neighbours lead to a triangle
      return from_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {5, 6}, {4, 6}});
    case ConfigId::C4: {
      GraphBuilder b(1);
      add_pendent_triangle(b, 0);
      Vertex c = b.add_vertices(5);
      b.add_edge(0, c);
      for (int i = 0; i < 5; ++i) b.add_edge(c + i, c + (i + 1) % 5);
      return b.build();
    }
    case ConfigId::C5:  // adjacent W3 vertices 0 and 1 over a 4-cycle 6..9
      return from_list(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 9},
                            {6, 7}, {7, 8}, {8, 9}, {9, 6}});
    case ConfigId::C6:  // v=0, v1=1 (W3), v2=2, z0=3, x=4,5, z=6,7,8
      return from_list(9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {4, 6}, {5, 7}, {2, 8},
                           {3, 6}, {6, 7}, {7, 8}, {8, 3}});
    case ConfigId::C7:  // v=0, W3 neighbours 1 and 2, z0=3, outer 5-cycle
      return from_list(12, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {4, 8}, {5, 9}, {6, 10},
                            {7, 11}, {3, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 3}});
    case ConfigId::C8:  // W4 vertex 0 with W2 neighbour 3
      return from_list(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
    case ConfigId::C9: {  // W5 vertex 0 next to a 3-vertex on a 4-cycle
      GraphBuilder b(1);
      add_pendent_triangle(b, 0);
      add_pendent_triangle(b, 0);
      Vertex c = b.add_vertices(4);
      b.add_edge(0, c);
      for (int i = 0; i < 4; ++i) b.add_edge(c + i, c + (i + 1) % 4);
      return b.build();
    }
    case ConfigId::C10: {  // 7-vertex on three triangles, W2 neighbour
      GraphBuilder b(1);
      for (int i = 0; i < 3; ++i) add_pendent_triangle(b, 0);
      Vertex v1 = b.add_vertex();
      b.add_edge(0, v1);
      Vertex c = b.add_vertices(4);
      b.add_edge(v1, c);
      for (int i = 0; i < 4; ++i) b.add_edge(c + i, c + (i + 1) % 4);
      return b.build();
    }
    case ConfigId::Cp1:  // alternating W3/W2 6-cycle over a triangle
      return from_list(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {2, 7}, {4, 8},
                           {6, 7}, {7, 8}, {8, 6}});
    case ConfigId::Cp2:  // 4-cycle of V3 vertices, W2 spokes to a hub
      return from_list(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
                           {4, 8}, {5, 8}, {6, 8}, {7, 8}});
    case ConfigId::Cp3: {  // V4 vertex 0 with two W5 and two W2 neighbours
      GraphBuilder b(1);
      add_w5(b, 0);
      add_w5(b, 0);
      Vertex u3 = b.add_vertex(), u4 = b.add_vertex();
      Vertex a = b.add_vertex(), c = b.add_vertex(), d = b.add_vertex();
      b.add_edge(0, u3);
      b.add_edge(0, u4);
      b.add_edge(u3, a);
      b.add_edge(u4, c);
      b.add_edge(a, c);
      b.add_edge(a, d);
      b.add_edge(c, d);
      return b.build();
    }
    case ConfigId::Cp4:  // 5-vertex on one triangle, three W2 neighbours
      return from_list(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {3, 6}, {4, 7}, {5, 8},
                           {6, 7}, {7, 8}, {6, 8}});
    case ConfigId::Cp5:  // 6-vertex on two triangles, two W2 neighbours
      return from_list(10, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6},
                            {5, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9}});
  }
  throw UsageError("no instance for configuration");
}

Graph gen_terminal_example() {
  GraphBuilder b(20);
  for (int i = 0; i < 12; ++i) b.add_edge(i, i + 1);  // W23 path p0 a1 p1 ... a6 p6
  const Vertex z = 13, y1 = 14, y2 = 15, y3 = 16, x = 17;
  b.add_edge(y1, 1);
  b.add_edge(y1, 7);
  b.add_edge(y1, z);
  b.add_edge(y2, 3);
  b.add_edge(y2, 9);
  b.add_edge(y2, 12);
  b.add_edge(y3, 5);
  b.add_edge(y3, 11);
  b.add_edge(y3, z);
  b.add_edge(x, 18);
  b.add_edge(x, 19);
  b.add_edge(18, 19);
  b.add_edge(x, 0);
  add_w5(b, y1);
  add_w5(b, y2);
  add_w5(b, y3);
  add_w5(b, x);
  add_w5(b, x);
  return b.build();
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + s + "'");
  }
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  auto parts = split(text, ':');
  const std::string& name = parts[0];
  FamilySpec s;
  auto arg = [&](std::size_t i, const char* what) -> const std::string& {
    if (i >= parts.size()) throw UsageError("family '" + name + "' needs " + what);
    return parts[i];
  };
  if (name == "g5n") {
    s.family = Family::G5n;
    s.n = static_cast<int>(to_int(arg(1, "n"), "n"));
  } else if (name == "cycle") {
    s.family = Family::Cycle;
    s.n = static_cast<int>(to_int(arg(1, "k"), "k"));
  } else if (name == "path") {
    s.family = Family::Path;
    s.n = static_cast<int>(to_int(arg(1, "k"), "k"));
  } else if (name == "complete") {
    s.family = Family::Complete;
    s.n = static_cast<int>(to_int(arg(1, "k"), "k"));
  } else if (name == "petersen") {
    s.family = Family::Petersen;
  } else if (name == "flower") {
    s.family = Family::Flower;
    s.n = static_cast<int>(to_int(arg(1, "k"), "k"));
  } else if (name == "tree") {
    s.family = Family::TreeRandom;
    s.n = static_cast<int>(to_int(arg(1, "n"), "n"));
    s.seed = static_cast<std::uint64_t>(to_int(arg(2, "seed"), "seed"));
  } else if (name == "gnp") {
    s.family = Family::Gnp;
    s.n = static_cast<int>(to_int(arg(1, "n"), "n"));
    s.bound = Rational::parse(arg(2, "p"));
    s.seed = static_cast<std::uint64_t>(to_int(arg(3, "seed"), "seed"));
  } else if (name == "mad-bounded") {
    s.family = Family::MadBoundedRandom;
    s.n = static_cast<int>(to_int(arg(1, "n"), "n"));
    s.bound = Rational::parse(arg(2, "bound"));
    s.seed = static_cast<std::uint64_t>(to_int(arg(3, "seed"), "seed"));
    if (parts.size() > 4) s.max_edges = to_int(parts[4], "edge cap");
  } else if (name == "host") {
    s.family = Family::GadgetHost;
    s.config = parse_config(arg(1, "configuration"));
  } else if (name == "terminal") {
    s.family = Family::Terminal;
  } else {
    throw UsageError("unknown family '" + name + "'");
  }
  return s;
}

std::string FamilySpec::to_string() const {
  std::ostringstream o;
  switch (family) {
    case Family::G5n: o << "g5n:" << n; break;
    case Family::Cycle: o << "cycle:" << n; break;
    case Family::Path: o << "path:" << n; break;
    case Family::Complete: o << "complete:" << n; break;
    case Family::Petersen: o << "petersen"; break;
    case Family::Flower: o << "flower:" << n; break;
    case Family::TreeRandom: o << "tree:" << n << ":" << seed; break;
    case Family::Gnp: o << "gnp:" << n << ":" << bound.to_string() << ":" << seed; break;
    case Family::MadBoundedRandom:
      o << "mad-bounded:" << n << ":" << bound.to_string() << ":" << seed;
      if (max_edges >= 0) o << ":" << max_edges;
      break;
    case Family::GadgetHost: o << "host:" << config_name(config); break;
    case Family::Terminal: o << "terminal"; break;
  }
  return o.str();
}

Graph generate(const FamilySpec& s) {
  switch (s.family) {
    case Family::G5n: return gen_g5n(s.n);
    case Family::Cycle: return gen_cycle(s.n);
    case Family::Path: return gen_path(s.n);
    case Family::Complete: return gen_complete(s.n);
    case Family::Petersen: return gen_petersen();
    case Family::Flower: return gen_flower(s.n);
    case Family::TreeRandom: return gen_random_tree(s.n, s.seed);
    case Family::Gnp:
      if (s.bound < Rational(0) || Rational(1) < s.bound) throw UsageError("gnp probability must be in [0, 1]");
      return gen_gnp(s.n, static_cast<std::uint64_t>(s.bound.num()), static_cast<std::uint64_t>(s.bound.den()), s.seed);
    case Family::MadBoundedRandom: return gen_mad_bounded(s.n, s.bound, s.seed, s.max_edges);
    case Family::GadgetHost: return gen_config_instance(s.config);
    case Family::Terminal: return gen_terminal_example();
  }
  throw UsageError("unknown family");
}

std::vector<NamedGraph> gen_corpus(int count, int n_max, const Rational& bound, std::uint64_t seed) {
  if (count < 0 || n_max < 2) throw UsageError("corpus needs count >= 0 and n >= 2");
  Rng rng(seed);
  std::vector<NamedGraph> out;
  const int width = static_cast<int>(std::to_string(std::max(count - 1, 0)).size());
  for (int i = 0; i < count; ++i) {
    int n = static_cast<int>(rng.between(std::min(4, n_max), n_max));
    std::int64_t cap = -1;
    if (rng.chance(1, 2)) cap = rng.between(n - 1, (4 * n) / 3);
    std::uint64_t s = rng.next();
    std::string id = std::to_string(i);
    id = "mb-" + std::string(static_cast<std::size_t>(width) - id.size(), '0') + id;
    out.push_back({id, gen_mad_bounded(n, bound, s, cap)});
  }
  return out;
}

std::vector<NamedGraph> builtin_boundary_corpus(int k, std::uint64_t seed) {
  std::vector<NamedGraph> out;
  auto add = [&](const std::string& id, Graph g) { out.push_back({id, std::move(g)}); };
  if (k == 2) {
    add("g5n-1", gen_g5n(1));
    for (int i = 0; i < 40; ++i)
      add("mb83-" + std::to_string(100 + i), gen_mad_bounded(6 + i % 9, Rational(8, 3), seed + i));
    return out;
  }
  for (int len = 3; len <= 16; ++len) add("cycle-" + std::to_string(100 + len), gen_cycle(len));
  for (int n = 2; n <= 12; ++n) add("tree-" + std::to_string(100 + n), gen_random_tree(n, seed + n));
  add("petersen", gen_petersen());
  for (int kk = 1; kk <= 3; ++kk) add("flower-" + std::to_string(kk), gen_flower(kk));
  for (int i = 0; i < 60; ++i) {
    Rational bound = i % 3 == 0 ? Rational(2) : i % 3 == 1 ? Rational(5, 2) : Rational(8, 3);
    add("mb-" + std::to_string(100 + i), gen_mad_bounded(5 + i % 8, bound, seed + 1000 + i));
  }
  return out;
}

}  // namespace madstar
