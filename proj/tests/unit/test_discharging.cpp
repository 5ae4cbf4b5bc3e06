#include "doctest.h"

#include <algorithm>

#include "madstar/configs.hpp"
#include "madstar/discharging.hpp"
#include "madstar/fii.hpp"
#include "madstar/generators.hpp"
#include "madstar/terminal.hpp"
#include "test_support.hpp"

using namespace madstar;

namespace {

// Final charges straight from the rules, in thirds.
std::vector<Rational> naive_final(const Graph& g) {
  std::vector<std::string> cls;
  for (Vertex v = 0; v < g.n(); ++v) cls.push_back(testing::naive_class(g, v));
  // 2-vertices on pendent cycles: walk the chain of 2-vertices both ways.
  auto on_pendent_cycle = [&](Vertex x) {
    if (g.degree(x) != 2) return false;
    Vertex ends[2];
    for (int side = 0; side < 2; ++side) {
      Vertex prev = x, cur = g.neighbors(x)[side];
      int steps = 0;
      while (g.degree(cur) == 2 && cur != x && steps++ <= g.n()) {
        Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
      }
      if (cur == x) return false;
      ends[side] = cur;
    }
    return ends[0] == ends[1];
  };
  std::vector<std::int64_t> thirds(g.n());
  for (Vertex v = 0; v < g.n(); ++v) thirds[v] = 3 * g.degree(v);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) < 3) continue;
    for (Vertex u : g.neighbors(v)) {
      std::int64_t send = 0;
      if (g.degree(u) == 2 && on_pendent_cycle(u)) send += 2;
      if (cls[u] == "W2") send += 1;
      if (cls[u] == "W3") send += 1;
      if (g.degree(v) >= 4 && cls[u] == "W5") send += 1;
      thirds[v] -= send;
      thirds[u] += send;
    }
  }
  std::vector<Rational> out;
  for (auto t : thirds) out.emplace_back(t, 3);
  return out;
}

}  // namespace

TEST_CASE("discharging: cycle has no transfers") {
  ChargeTable t = run_discharging(gen_cycle(6));
  CHECK(t.transfers.empty());
  for (const auto& f : t.final) CHECK(f == Rational(2));
}

TEST_CASE("discharging: bowtie with a pendant edge") {
  Graph g = testing::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}});
  ChargeTable t = run_discharging(g);
  CHECK(t.transfers.size() == 4);
  for (const auto& tr : t.transfers) {
    CHECK(tr.rule == Rule::R1);
    CHECK(tr.amount == Rational(2, 3));
  }
  CHECK(t.final[0] == Rational(5) - Rational(8, 3));
  CHECK(t.final[1] == Rational(8, 3));
  CHECK(t.final[5] == Rational(1));
}

TEST_CASE("discharging: tightness family") {
  Graph g = gen_g5n(1);
  ChargeTable t = run_discharging(g);
  CHECK(t.total_initial() == Rational(46));
  CHECK(t.total_final() == Rational(46));
  CHECK(replay_transfers(t) == t.final);
  CHECK(t.final == naive_final(g));
}

TEST_CASE("discharging: conservation, locality and independent recomputation") {
  testing::Gen gen(404);
  std::vector<Graph> graphs;
  for (const Graph& g : testing::atlas()) graphs.push_back(g);
  for (int i = 0; i < 300; ++i) graphs.push_back(gen_mad_bounded(gen.uniform(3, 20), Rational(3), 50 + i));
  for (ConfigId id : all_configs()) graphs.push_back(gen_config_instance(id));
  graphs.push_back(gen_terminal_example());
  for (const Graph& g : graphs) {
    ChargeTable t = run_discharging(g);
    CHECK(t.total_final() == Rational(2 * g.m()));
    CHECK(replay_transfers(t) == t.final);
    for (const auto& tr : t.transfers) CHECK(g.adjacent(tr.from, tr.to));
    CHECK(t.final == naive_final(g));
  }
}

TEST_CASE("audit: each host flags its configuration") {
  for (int i = 0; i <= static_cast<int>(ConfigId::C10); ++i) {
    ConfigId id = static_cast<ConfigId>(i);
    AuditReport r = audit_final_charges(gen_config_instance(id));
    CHECK(r.conserved);
    bool flagged = false;
    for (const auto* list : {&r.deficits, &r.tight})
      for (const auto& e : *list)
        for (const auto& nc : e.nearby) flagged = flagged || nc.id == id;
    CHECK_MESSAGE(flagged, config_name(id));
  }
}

TEST_CASE("audit: C3 host names C3 at the deficit vertex") {
  AuditReport r = audit_final_charges(gen_config_instance(ConfigId::C3));
  auto it = std::find_if(r.deficits.begin(), r.deficits.end(), [](const AuditEntry& e) { return e.v == 0; });
  REQUIRE(it != r.deficits.end());
  CHECK(it->final == Rational(2));
  CHECK(std::any_of(it->nearby.begin(), it->nearby.end(), [](const NearbyConfig& c) { return c.id == ConfigId::C3 && c.distance == 0; }));
}

TEST_CASE("audit: configuration-free graph has no deficits") {
  Graph p = gen_petersen();
  CHECK(scan_configs(p).empty());
  AuditReport r = audit_final_charges(p);
  CHECK(r.deficits.empty());
  CHECK(r.tight.empty());
}

TEST_CASE("audit: free triangle") {
  AuditReport r = audit_final_charges(gen_cycle(3));
  CHECK(r.deficits.size() == 3);
  for (const auto& e : r.deficits) {
    CHECK(e.final == Rational(2));
    CHECK(std::any_of(e.nearby.begin(), e.nearby.end(), [](const NearbyConfig& c) { return c.id == ConfigId::C2; }));
  }
}

TEST_CASE("audit: every deficit has a configuration nearby or is a flower") {
  testing::Gen gen(77);
  std::vector<Graph> graphs;
  for (const Graph& g : testing::atlas()) graphs.push_back(g);
  for (int i = 0; i < 300; ++i) graphs.push_back(gen_mad_bounded(gen.uniform(3, 16), Rational(8, 3), 4000 + i));
  for (int k = 1; k <= 3; ++k) graphs.push_back(gen_flower(k));
  for (const Graph& g : graphs) {
    for (const auto& e : audit_final_charges(g).deficits) CHECK((!e.nearby.empty() || !e.note.empty()));
  }
}

TEST_CASE("terminal partition: hand-built example") {
  TerminalResult r = build_terminal_partition(gen_terminal_example());
  REQUIRE(r.applicable);
  CHECK(r.verified);
  const auto& t = *r.result;
  CHECK(t.X == std::vector<Vertex>{17});
  CHECK(t.Y_alpha.size() + t.Y_beta.size() == 3);
  CHECK(t.Z == std::vector<Vertex>{13});
  CHECK(verify_fii(gen_terminal_example(), t.partition).ok);
}

TEST_CASE("terminal partition: adjacent V4+ vertices") {
  // Two adjacent 5-vertices sharing four 2-neighbours.
  GraphBuilder b(6);
  b.add_edge(0, 1);
  for (Vertex x = 2; x < 6; ++x) {
    b.add_edge(0, x);
    b.add_edge(1, x);
  }
  TerminalResult r = build_terminal_partition(b.build());
  CHECK_FALSE(r.applicable);
  CHECK(r.violated == "V4+ independent");
}

TEST_CASE("terminal partition: degenerate inputs") {
  TerminalResult forest = build_terminal_partition(gen_random_tree(12, 8));
  REQUIRE(forest.applicable);
  CHECK(forest.verified);
  CHECK(std::all_of(forest.result->partition.label.begin(), forest.result->partition.label.end(), [](int x) { return x == 0; }));

  for (int k = 1; k <= 4; ++k) {
    TerminalResult fl = build_terminal_partition(gen_flower(k));
    REQUIRE(fl.applicable);
    CHECK(fl.verified);
  }
  TerminalResult big = build_terminal_partition(gen_complete(8));
  CHECK_FALSE(big.applicable);
  CHECK(big.violated == "P1");
}

TEST_CASE("terminal partition: success always verifies") {
  testing::Gen gen(12);
  int applicable = 0;
  for (int i = 0; i < 400; ++i) {
    Graph g = gen_mad_bounded(gen.uniform(3, 14), Rational(8, 3), 9000 + i);
    TerminalResult r = build_terminal_partition(g);
    if (!r.applicable) continue;
    ++applicable;
    CHECK(r.verified);
    CHECK(verify_fii(g, r.result->partition).ok);
  }
  CHECK(applicable > 0);
}
