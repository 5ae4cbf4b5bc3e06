#include "madstar/taxonomy.hpp"

#include <algorithm>

namespace madstar {

std::string class_label(VertexClass cls, int degree) {
  switch (cls) {
    case VertexClass::W2: return "W2";
    case VertexClass::W3: return "W3";
    case VertexClass::W4: return "W4";
    case VertexClass::W5: return "W5";
    case VertexClass::V3: return "V3";
    case VertexClass::V4: return "V4";
    case VertexClass::V5: return "V5";
    case VertexClass::V6: return "V6";
    case VertexClass::PendentTriangle2Vertex: return "T";
    case VertexClass::Other: break;
  }
  return "Other(" + std::to_string(degree) + ")";
}

std::vector<PendentCycle> find_pendent_cycles(const Graph& g) {
  std::vector<PendentCycle> out;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s] || g.degree(s) != 2) continue;
    // Extend the chain of 2-vertices through s in both directions.
    std::vector<Vertex> chain{s};
    seen[s] = 1;
    std::array<Vertex, 2> end{};
    bool closed = false;
    for (int side = 0; side < 2 && !closed; ++side) {
      Vertex prev = s;
      Vertex cur = g.neighbors(s)[side];
      std::vector<Vertex> part;
      while (g.degree(cur) == 2) {
        if (cur == s) {
          closed = true;
          break;
        }
        seen[cur] = 1;
        part.push_back(cur);
        auto nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (side == 0) {
        std::reverse(part.begin(), part.end());
        chain.insert(chain.begin(), part.begin(), part.end());
      } else {
        chain.insert(chain.end(), part.begin(), part.end());
      }
      end[side] = cur;
    }
    if (closed || end[0] != end[1] || g.degree(end[0]) < 3) continue;
    PendentCycle c{end[0], {end[0]}};
    // Orient the cycle so the smaller neighbour of the apex comes first.
    if (chain.front() > chain.back()) std::reverse(chain.begin(), chain.end());
    c.cycle_vertices.insert(c.cycle_vertices.end(), chain.begin(), chain.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const PendentCycle& a, const PendentCycle& b) {
    return a.cycle_vertices < b.cycle_vertices;
  });
  return out;
}

std::vector<PendentCycle> find_pendent_triangles(const Graph& g) {
  auto all = find_pendent_cycles(g);
  std::erase_if(all, [](const PendentCycle& c) { return !c.is_triangle(); });
  return all;
}

Taxonomy::Taxonomy(const Graph& g)
    : g_(&g),
      cls_(static_cast<std::size_t>(g.n()), VertexClass::Other),
      triangles_at_(static_cast<std::size_t>(g.n())),
      on_cycle_(static_cast<std::size_t>(g.n()), 0),
      apex_of_(static_cast<std::size_t>(g.n()), -1),
      cycles_(find_pendent_cycles(g)) {
  std::vector<char> on_triangle(static_cast<std::size_t>(g.n()), 0);
  for (const auto& c : cycles_) {
    for (std::size_t i = 1; i < c.cycle_vertices.size(); ++i) {
      on_cycle_[c.cycle_vertices[i]] = 1;
      apex_of_[c.cycle_vertices[i]] = c.apex;
      on_triangle[c.cycle_vertices[i]] = c.is_triangle();
    }
    if (c.is_triangle()) triangles_at_[c.apex].push_back({c.cycle_vertices[1], c.cycle_vertices[2]});
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    int tri = pendent_triangles_at(v);
    switch (d) {
      case 2:
        cls_[v] = on_triangle[v] ? VertexClass::PendentTriangle2Vertex
                                 : VertexClass::W2;
        break;
      case 3: {
        int twos = 0;
        for (Vertex u : g.neighbors(v)) twos += g.degree(u) == 2;
        cls_[v] = twos >= 2 ? VertexClass::W3 : VertexClass::V3;
        break;
      }
      case 4: cls_[v] = tri == 1 ? VertexClass::W4 : VertexClass::V4; break;
      case 5: cls_[v] = tri == 2 ? VertexClass::W5 : VertexClass::V5; break;
      case 6: cls_[v] = VertexClass::V6; break;
      default: cls_[v] = VertexClass::Other; break;
    }
  }
}

bool Taxonomy::in_w(Vertex v, std::string_view digits) const {
  for (char d : digits) {
    if (d == '2' && is_w2(v)) return true;
    if (d == '3' && is_w3(v)) return true;
    if (d == '4' && is_w4(v)) return true;
    if (d == '5' && is_w5(v)) return true;
  }
  return false;
}

int Taxonomy::count_neighbors(Vertex v, VertexClass c) const {
  int k = 0;
  for (Vertex u : g_->neighbors(v)) k += cls_[u] == c;
  return k;
}

int Taxonomy::count_degree_neighbors(Vertex v, int degree) const {
  int k = 0;
  for (Vertex u : g_->neighbors(v)) k += g_->degree(u) == degree;
  return k;
}

}  // namespace madstar
