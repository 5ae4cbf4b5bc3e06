#include "madstar/density.hpp"

#include <algorithm>

#include "madstar/errors.hpp"
#include "madstar/flow.hpp"

namespace madstar {

PotentialResult min_linear_potential(const Graph& g, std::int64_t per_vertex, std::int64_t per_edge,
                                     std::span<const Vertex> forced) {
  // Doubling turns a|S| - c|E(S)| into sum_{v in S} (2a - c deg v) + c |cut(S)|,
  // which is a source/sink cut plus the constant sum of negative weights.
  const int n = g.n();
  const int source = n, sink = n + 1;
  MaxFlow net(n + 2);
  std::int64_t negative = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::int64_t b = 2 * per_vertex - per_edge * g.degree(v);
    if (b > 0) net.add_arc(v, sink, b);
    if (b < 0) {
      net.add_arc(source, v, -b);
      negative += -b;
    }
  }
  for (Vertex v : forced) {
    if (!g.valid(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
    net.add_arc(source, v, MaxFlow::kInfinite);
  }
  if (per_edge > 0)
    for (auto [u, v] : g.edges()) net.add_undirected(u, v, per_edge);
  std::int64_t cut = net.solve(source, sink);
  auto side = net.source_side(source);
  PotentialResult r;
  for (Vertex v = 0; v < n; ++v)
    if (side[v]) r.minimizer.push_back(v);
  r.value = (cut - negative) / 2;
  return r;
}

std::int64_t rho(const Graph& g, std::span<const Vertex> a) {
  std::vector<Vertex> s(a.begin(), a.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return 4 * static_cast<std::int64_t>(s.size()) - 3 * induced_edge_count(g, s);
}

PotentialResult rho_star(const Graph& g, std::span<const Vertex> seed) {
  return min_linear_potential(g, 4, 3, seed);
}

MadBoundCheck mad_le_8_3(const Graph& g) {
  auto r = rho_star(g, {});
  MadBoundCheck out;
  out.min_potential = r.value;
  out.holds = r.value >= 0;
  if (!out.holds) out.violating_set = std::move(r.minimizer);
  return out;
}

bool mad_at_most(const Graph& g, const Rational& bound, std::vector<Vertex>* violator) {
  if (bound < Rational(0)) throw UsageError("mad bound must be nonnegative");
  // 2|E(S)|/|S| <= p/q  <=>  p|S| - 2q|E(S)| >= 0.
  auto r = min_linear_potential(g, bound.num(), 2 * bound.den(), {});
  if (r.value >= 0) return true;
  if (violator) *violator = std::move(r.minimizer);
  return false;
}

Density mad(const Graph& g) {
  if (g.n() == 0) throw ValidationError("mad is undefined on the empty graph");
  std::vector<Vertex> best(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) best[v] = v;
  if (g.m() == 0) return {Rational(0), {0}};
  Rational ratio(g.m(), g.n());
  // Each round strictly increases |E(S)|/|S|, and there are finitely many values.
  for (;;) {
    auto r = min_linear_potential(g, ratio.num(), ratio.den(), {});
    if (r.value >= 0) break;
    best = std::move(r.minimizer);
    ratio = Rational(induced_edge_count(g, best), static_cast<std::int64_t>(best.size()));
  }
  return {ratio * Rational(2), std::move(best)};
}

}  // namespace madstar
