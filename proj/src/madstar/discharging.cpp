#include "madstar/discharging.hpp"

#include <algorithm>

#include "madstar/taxonomy.hpp"

namespace madstar {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
  }
  return "R1";
}

Rational ChargeTable::total_initial() const {
  Rational s;
  for (const auto& c : initial) s += c;
  return s;
}

Rational ChargeTable::total_final() const {
  Rational s;
  for (const auto& c : final) s += c;
  return s;
}

ChargeTable run_discharging(const Graph& g) {
  Taxonomy tax(g);
  ChargeTable t;
  const Rational third(1, 3), two_thirds(2, 3);
  for (Vertex v = 0; v < g.n(); ++v) t.initial.emplace_back(g.degree(v));
  for (Vertex u = 0; u < g.n(); ++u) {
    const int d = g.degree(u);
    if (d < 3) continue;
    for (Vertex x : g.neighbors(u)) {
      if (g.degree(x) == 2 && tax.on_pendent_cycle(x)) t.transfers.push_back({u, x, two_thirds, Rule::R1});
      if (tax.is_w2(x)) t.transfers.push_back({u, x, third, Rule::R2});
      if (tax.is_w3(x)) t.transfers.push_back({u, x, third, Rule::R3});
      if (d >= 4 && tax.is_w5(x)) t.transfers.push_back({u, x, third, Rule::R4});
    }
  }
  t.final = replay_transfers(t);
  return t;
}

std::vector<Rational> replay_transfers(const ChargeTable& table) {
  std::vector<Rational> out = table.initial;
  for (const auto& tr : table.transfers) {
    out[tr.from] -= tr.amount;
    out[tr.to] += tr.amount;
  }
  return out;
}

bool is_flower(const Graph& g, const std::vector<Vertex>& comp, Vertex* center) {
  if (comp.size() < 3 || comp.size() % 2 == 0) return false;
  const int k = static_cast<int>(comp.size() - 1) / 2;
  Vertex c = -1;
  for (Vertex v : comp) {
    if (g.degree(v) == 2 * k && c < 0) c = v;
    else if (g.degree(v) != 2) return false;
  }
  if (c < 0) return false;
  // Every non-centre vertex: one neighbour is the centre, the other is a
  // non-centre whose other neighbour is the centre too.
  for (Vertex v : comp) {
    if (v == c) continue;
    auto nb = g.neighbors(v);
    Vertex other = nb[0] == c ? nb[1] : nb[0];
    if (!(nb[0] == c || nb[1] == c) || !g.adjacent(other, c)) return false;
  }
  if (center) *center = c;
  return true;
}

AuditReport audit_final_charges(const Graph& g) {
  AuditReport rep;
  ChargeTable table = run_discharging(g);
  rep.total = table.total_final();
  rep.conserved = rep.total == table.total_initial() && rep.total == Rational(2 * g.m());

  Taxonomy tax(g);
  std::vector<ConfigId> local;
  for (int i = 0; i <= static_cast<int>(ConfigId::C10); ++i) local.push_back(static_cast<ConfigId>(i));
  std::vector<ConfigMatch> matches;
  bool scanned = false;

  int comp_count = 0;
  std::vector<int> comp = component_ids(g, &comp_count);
  std::vector<std::vector<Vertex>> members(comp_count);
  for (Vertex v = 0; v < g.n(); ++v) members[comp[v]].push_back(v);

  auto explain = [&](Vertex v) {
    if (!scanned) {
      matches = scan_configs(g, local);
      scanned = true;
    }
    AuditEntry e;
    e.v = v;
    e.cls = tax.label(v);
    e.final = table.final[v];
    auto dist = bfs_distances(g, v, 2);
    for (const auto& m : matches) {
      int best = kUnreachable;
      for (Vertex u : m.vertices()) best = std::min(best, dist[u]);
      if (best <= 2) e.nearby.push_back({m.id, m.key, best});
    }
    if (is_flower(g, members[comp[v]]))
      e.note = "component is " + std::to_string((members[comp[v]].size() - 1) / 2) +
               " triangles sharing one vertex";
    return e;
  };

  const Rational threshold(8, 3);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (table.final[v] < threshold) rep.deficits.push_back(explain(v));
    else if (g.degree(v) >= 7 && table.final[v] == threshold) rep.tight.push_back(explain(v));
  }
  return rep;
}

}  // namespace madstar
