#include "madstar/terminal.hpp"

#include <algorithm>
#include <deque>

#include "madstar/discharging.hpp"
#include "madstar/taxonomy.hpp"

namespace madstar {

namespace {

bool is_v4plus(VertexClass c) { return c == VertexClass::V4 || c == VertexClass::V5 || c == VertexClass::V6; }

struct Failure {
  std::string property;
  std::string detail;
};

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

}  // namespace

TerminalResult build_terminal_partition(const Graph& g) {
  TerminalResult out;
  Taxonomy tax(g);
  TerminalPartition tp;
  tp.partition.k = 2;
  tp.partition.label.assign(g.n(), 0);

  int comp_count = 0;
  auto comp = component_ids(g, &comp_count);
  std::vector<std::vector<Vertex>> members(comp_count);
  for (Vertex v = 0; v < g.n(); ++v) members[comp[v]].push_back(v);

  std::vector<char> general(g.n(), 0);
  for (const auto& c : members) {
    std::int64_t edges = induced_edge_count(g, c);
    Vertex center = -1;
    if (edges == static_cast<std::int64_t>(c.size()) - 1) {
      tp.special.insert(tp.special.end(), c.begin(), c.end());
    } else if (is_flower(g, c, &center)) {
      tp.special.insert(tp.special.end(), c.begin(), c.end());
      tp.partition.label[center] = 1;
    } else {
      for (Vertex v : c) general[v] = 1;
    }
  }
  std::sort(tp.special.begin(), tp.special.end());

  auto fail = [&](std::string property, std::string detail) {
    out.applicable = false;
    out.violated = std::move(property);
    out.detail = std::move(detail);
    return out;
  };

  // Preconditions, in order.
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!general[v]) continue;
    VertexClass c = tax.cls(v);
    if (c == VertexClass::Other && g.degree(v) >= 7)
      return fail("P1", vname(v) + " has degree " + std::to_string(g.degree(v)));
    bool ok = c == VertexClass::PendentTriangle2Vertex || c == VertexClass::W2 || c == VertexClass::W3 ||
              c == VertexClass::W5 || is_v4plus(c);
    if (!ok) return fail("V = T + W235 + V4+", vname(v) + " is " + tax.label(v));
  }
  for (auto [u, v] : g.edges())
    if (general[u] && is_v4plus(tax.cls(u)) && is_v4plus(tax.cls(v)))
      return fail("V4+ independent", "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are adjacent");

  std::vector<char> w23(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) w23[v] = general[v] && tax.in_w(v, "23");
  {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n(); ++v)
      if (w23[v]) keep.push_back(v);
    Subgraph s = induced_subgraph(g, keep);
    bool paths = is_forest(s.graph) && (s.graph.n() == 0 || s.graph.max_degree() <= 2);
    if (!paths) return fail("G[W23] is a union of paths", "G[W23] has a cycle or a vertex of degree 3");
  }

  auto count_nb = [&](Vertex v, auto pred) {
    int k = 0;
    for (Vertex u : g.neighbors(v))
      if (pred(u)) ++k;
    return k;
  };
  auto is_w235 = [&](Vertex u) { return tax.in_w(u, "235"); };
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!general[v]) continue;
    switch (tax.cls(v)) {
      case VertexClass::V6:
        if (tax.pendent_triangles_at(v) != 2 || count_nb(v, [&](Vertex u) { return tax.is_w3(u); }) != 2)
          return fail("P1", vname(v) + " is a 6-vertex without two pendent triangles and two W3-neighbours");
        break;
      case VertexClass::V5:
        if (tax.pendent_triangles_at(v) != 1 || count_nb(v, is_w235) != 3 ||
            count_nb(v, [&](Vertex u) { return tax.is_w2(u); }) > 1)
          return fail("P2", vname(v) + " is a V5-vertex violating the one-triangle, three-W235, one-W2 shape");
        break;
      case VertexClass::V4:
        if (count_nb(v, is_w235) != 4 || count_nb(v, [&](Vertex u) { return tax.is_w5(u); }) > 1 ||
            count_nb(v, [&](Vertex u) { return tax.is_w2(u); }) > 1)
          return fail("P3", vname(v) + " is a V4-vertex violating the W235, one-W5, one-W2 shape");
        break;
      case VertexClass::W5: {
        int outside = count_nb(v, [&](Vertex u) { return is_v4plus(tax.cls(u)); });
        if (outside != 1) return fail("W5 fifth neighbour in V4+", vname(v));
        break;
      }
      default: break;
    }
  }

  // (1) X, Y, Y', Z.
  std::vector<char> in_z(g.n(), 0), in_yp(g.n(), 0);
  std::vector<char> in_x(g.n(), 0);
  std::vector<Vertex> y;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (w23[v]) {
      if (count_nb(v, [&](Vertex u) { return w23[u] != 0; }) == 0) {
        in_z[v] = 1;
        tp.Z.push_back(v);
      } else {
        tp.F0.push_back(v);
      }
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!general[v] || !is_v4plus(tax.cls(v))) continue;
    if (count_nb(v, [&](Vertex u) { return tax.is_w5(u); }) >= 2) {
      in_x[v] = 1;
      tp.X.push_back(v);
    } else {
      y.push_back(v);
      if (count_nb(v, [&](Vertex u) { return in_z[u] != 0; }) > 0) in_yp[v] = 1;
    }
  }
  std::vector<int> side(g.n(), 0);  // 1 alpha, 2 beta
  std::vector<char> seen(g.n(), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (!(in_yp[s] || in_z[s]) || seen[s]) continue;
    std::vector<Vertex> comp_y;
    std::deque<Vertex> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      if (in_yp[v]) comp_y.push_back(v);
      for (Vertex u : g.neighbors(v))
        if ((in_yp[u] || in_z[u]) && !seen[u]) {
          seen[u] = 1;
          q.push_back(u);
        }
    }
    std::sort(comp_y.begin(), comp_y.end());
    if (comp_y.size() > 2) return fail("G[Y'+Z] components", "component with more than two Y' vertices at " + vname(s));
    for (std::size_t i = 0; i < comp_y.size(); ++i) side[comp_y[i]] = static_cast<int>(i) + 1;
  }
  for (Vertex v : y) {
    if (side[v] == 2) tp.Y_beta.push_back(v);
    else {
      side[v] = 1;
      tp.Y_alpha.push_back(v);
    }
  }

  // (2) W5 by the side of its V4+ neighbour.
  std::vector<char> in_wx(g.n(), 0);
  for (Vertex w = 0; w < g.n(); ++w) {
    if (!general[w] || !tax.is_w5(w)) continue;
    for (Vertex u : g.neighbors(w)) {
      if (!is_v4plus(tax.cls(u))) continue;
      if (in_x[u]) {
        in_wx[w] = 1;
        tp.W_X.push_back(w);
      } else if (side[u] == 2) {
        tp.W_alpha.push_back(w);
      } else {
        tp.W_beta.push_back(w);
      }
    }
  }

  // (3) One 2-vertex per pendent triangle at X or W_X, split greedily.
  std::vector<Vertex> chosen;
  for (Vertex v = 0; v < g.n(); ++v)
    if (in_x[v] || in_wx[v])
      for (const auto& t : tax.triangles_at(v)) chosen.push_back(std::min(t[0], t[1]));
  std::sort(chosen.begin(), chosen.end());
  auto close = [&](Vertex a, const std::vector<Vertex>& set) {
    auto near = ball2(g, a);
    for (Vertex b : set)
      if (std::binary_search(near.begin(), near.end(), b)) return true;
    return false;
  };
  for (Vertex t : chosen) {
    if (!close(t, tp.T_alpha)) tp.T_alpha.push_back(t);
    else if (!close(t, tp.T_beta)) tp.T_beta.push_back(t);
    else return fail("T split", "no 2-independent side for " + vname(t));
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (general[v] && tax.on_pendent_triangle(v) && !std::binary_search(tp.T_alpha.begin(), tp.T_alpha.end(), v) &&
        !std::binary_search(tp.T_beta.begin(), tp.T_beta.end(), v))
      tp.T_X.push_back(v);

  for (auto* s : {&tp.Y_alpha, &tp.W_alpha, &tp.T_alpha})
    for (Vertex v : *s) tp.partition.label[v] = 1;
  for (auto* s : {&tp.Y_beta, &tp.W_beta, &tp.T_beta})
    for (Vertex v : *s) tp.partition.label[v] = 2;

  out.applicable = true;
  out.verified = verify_fii(g, tp.partition).ok;
  out.result = std::move(tp);
  return out;
}

}  // namespace madstar
