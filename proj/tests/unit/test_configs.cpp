#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "madstar/configs.hpp"
#include "madstar/density.hpp"
#include "madstar/errors.hpp"
#include "madstar/fii.hpp"
#include "madstar/gadgets.hpp"
#include "madstar/generators.hpp"
#include "madstar/lemma.hpp"
#include "test_support.hpp"

using namespace madstar;
using Key = std::pair<std::string, std::vector<Vertex>>;

namespace {

// Brute-force matcher: tries every role assignment straight from the
// definitions, with classes from the naive classifier.
class Naive {
 public:
  explicit Naive(const Graph& g) : g_(g), n_(g.n()) {
    for (Vertex v = 0; v < n_; ++v) cls_.push_back(testing::naive_class(g, v));
  }

  std::set<Key> all() {
    std::set<Key> out;
    auto add = [&](const char* id, std::vector<Vertex> key) { out.insert({id, std::move(key)}); };
    for (Vertex v = 0; v < n_; ++v) {
      if (deg(v) <= 1) add("C1", {v});
      if (deg(v) == 3 && twos(v) == 3) add("C3", {v});
      if (deg(v) == 3 && tri(v) >= 1) add("C4", {v});
      if (cls_[v] == "V4") {
        int c2 = 0, c5 = 0;
        bool ok = true;
        for (Vertex u : g_.neighbors(v)) {
          c2 += is(u, "W2");
          c5 += is(u, "W5");
          ok = ok && in(u, "235");
        }
        if (ok && (c2 >= 2 || c5 >= 2)) add("Cp3", {v});
      }
      if (deg(v) == 5 && tri(v) == 1) {
        auto rest = off(v);
        int c2 = 0;
        bool ok = true;
        for (Vertex u : rest) {
          c2 += is(u, "W2");
          ok = ok && in(u, "235");
        }
        if (ok && c2 >= 2) add("Cp4", {v});
      }
    }
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!g_.adjacent(u, v)) continue;
        if (is(u, "W2") && is(v, "W2")) add("C2", {u, v});
        if (is(u, "W3") && is(v, "W3")) add("C5", {u, v});
      }
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = 0; b < n_; ++b) {
          if (a == b || !g_.adjacent(v, a) || !g_.adjacent(v, b)) continue;
          if (deg(v) == 3 && is(a, "W3") && deg(b) == 2) add("C6", {v, a, b});
          if (deg(v) == 3 && a < b && is(a, "W3") && is(b, "W3")) add("C7", {v, a, b});
          if (deg(v) == 6 && tri(v) == 2 && !on_tri_at(a, v) && !on_tri_at(b, v) && in(a, "25") && in(b, "235"))
            add("Cp5", {v, a, b});
        }
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex a : g_.neighbors(v)) {
        if (on_tri_at(a, v)) continue;
        if (is(v, "W4") && in(a, "2345")) add("C8", {v, a});
        if (is(v, "W5") && off(v).size() == 1 && (deg(a) == 3 || is(a, "W2") || is(a, "W5"))) add("C9", {v, a});
        if (deg(v) == 7 && tri(v) == 3 && in(a, "235")) add("C10", {v, a});
      }
    std::vector<char> w23(n_), cp2(n_);
    for (Vertex v = 0; v < n_; ++v) {
      w23[v] = in(v, "23");
      bool has = false;
      for (Vertex u : g_.neighbors(v)) has = has || in(u, "23");
      cp2[v] = is(v, "W4") || (is(v, "V3") && has);
    }
    for (auto& c : cycles(w23)) add("Cp1", c);
    for (auto& c : cycles(cp2)) add("Cp2", c);
    return out;
  }

  bool cycles_small_enough() const {
    int a = 0, b = 0;
    for (Vertex v = 0; v < n_; ++v) {
      a += in(v, "23");
      b += is(v, "W4") || is(v, "V3");
    }
    return a <= 9 && b <= 9;
  }

 private:
  int deg(Vertex v) const { return g_.degree(v); }
  bool is(Vertex v, const char* c) const { return cls_[v] == c; }
  bool in(Vertex v, const char* digits) const {
    for (const char* d = digits; *d; ++d)
      if (cls_[v] == std::string("W") + *d) return true;
    return false;
  }
  int twos(Vertex v) const {
    int k = 0;
    for (Vertex u : g_.neighbors(v)) k += deg(u) == 2;
    return k;
  }
  // u is a 2-vertex on a pendent triangle whose apex is v.
  bool on_tri_at(Vertex u, Vertex v) const {
    if (deg(u) != 2 || deg(v) < 3 || !g_.adjacent(u, v)) return false;
    for (Vertex w : g_.neighbors(u))
      if (w != v && deg(w) == 2 && g_.adjacent(w, v)) return true;
    return false;
  }
  int tri(Vertex v) const {
    int k = 0;
    for (Vertex u : g_.neighbors(v)) k += on_tri_at(u, v);
    return k / 2;
  }
  std::vector<Vertex> off(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u : g_.neighbors(v))
      if (!on_tri_at(u, v)) out.push_back(u);
    return out;
  }

  std::vector<std::vector<Vertex>> cycles(const std::vector<char>& allowed) const {
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n_; ++v)
      if (allowed[v]) pool.push_back(v);
    std::vector<std::vector<Vertex>> out;
    const int p = static_cast<int>(pool.size());
    for (int mask = 1; mask < (1 << p); ++mask) {
      std::vector<Vertex> s;
      for (int i = 0; i < p; ++i)
        if (mask >> i & 1) s.push_back(pool[i]);
      if (s.size() < 3) continue;
      std::vector<Vertex> rest(s.begin() + 1, s.end());
      do {
        if (rest.front() > rest.back()) continue;
        bool ok = g_.adjacent(s[0], rest.front()) && g_.adjacent(rest.back(), s[0]);
        for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g_.adjacent(rest[i], rest[i + 1]);
        if (!ok) continue;
        std::vector<Vertex> c{s[0]};
        c.insert(c.end(), rest.begin(), rest.end());
        out.push_back(c);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
  }

  const Graph& g_;
  int n_;
  std::vector<std::string> cls_;
};

std::set<Key> fast_keys(const Graph& g) {
  std::set<Key> out;
  for (const auto& m : scan_configs(g)) out.insert({std::string(config_name(m.id)), m.key});
  return out;
}

// Small random host with pendent triangles and subdivided edges grafted on.
Graph decorated(testing::Gen& gen) {
  Graph base = gen.gnp(gen.uniform(2, 6), 0.45);
  GraphBuilder b = to_builder(base);
  const int extras = gen.uniform(0, 5);
  for (int i = 0; i < extras && b.n() < 14; ++i) {
    Vertex at = gen.uniform(0, b.n() - 1);
    switch (gen.uniform(0, 2)) {
      case 0: graft(b, at, {GadgetKind::PendentTriangle}); break;
      case 1: {
        Vertex x = b.add_vertex();
        b.add_edge(at, x);
        break;
      }
      default: {
        Vertex other = gen.uniform(0, b.n() - 1);
        if (other != at) graft(b, at, {GadgetKind::AddPath2, other});
      }
    }
  }
  return b.build();
}

}  // namespace

TEST_CASE("config names") {
  CHECK(parse_config("C'1") == ConfigId::Cp1);
  CHECK(parse_config("C′3") == ConfigId::Cp3);
  CHECK(parse_config("C10") == ConfigId::C10);
  CHECK_THROWS_AS(parse_config("C11"), UsageError);
  CHECK(parse_config_list("C5,Cp1").size() == 2);
}

TEST_CASE("scan examples") {
  GraphBuilder b(3);
  b.add_edge(0, 1);
  auto isolated = scan_configs(b.build());
  CHECK(std::any_of(isolated.begin(), isolated.end(), [](const ConfigMatch& m) { return m.id == ConfigId::C1 && m.key == std::vector<Vertex>{2}; }));

  auto c5 = scan_configs(gen_config_instance(ConfigId::C5));
  CHECK(std::any_of(c5.begin(), c5.end(), [](const ConfigMatch& m) { return m.id == ConfigId::C5; }));

  std::array<ConfigId, 1> cp1{ConfigId::Cp1};
  auto c8 = scan_configs(gen_cycle(8), cp1);
  REQUIRE(c8.size() == 1);
  CHECK(c8[0].key.size() == 8);
  CHECK(c8[0].variant == "plain");

  CHECK(scan_configs(gen_petersen()).empty());
}

TEST_CASE("every shipped instance contains its configuration") {
  for (ConfigId id : all_configs()) {
    std::array<ConfigId, 1> one{id};
    CHECK_MESSAGE(!scan_configs(gen_config_instance(id), one).empty(), config_name(id));
  }
}

TEST_CASE("scan agrees with the brute-force matcher") {
  testing::Gen gen(2024);
  std::vector<Graph> graphs;
  for (ConfigId id : all_configs()) graphs.push_back(gen_config_instance(id));
  for (const Graph& g : testing::atlas())
    if (g.n() >= 5) graphs.push_back(g);
  for (int t = 0; t < 500; ++t) graphs.push_back(decorated(gen));
  int compared = 0;
  for (const Graph& g : graphs) {
    Naive naive(g);
    if (!naive.cycles_small_enough()) continue;
    ++compared;
    CHECK(fast_keys(g) == naive.all());
  }
  CHECK(compared > 1000);
}

TEST_CASE("rebuild_match round-trips keys") {
  Graph g = gen_config_instance(ConfigId::C7);
  for (const auto& m : scan_configs(g)) {
    ConfigMatch r = rebuild_match(g, m.id, m.key);
    CHECK(r.roles == m.roles);
  }
  std::vector<Vertex> bogus{1};
  CHECK_THROWS_AS(rebuild_match(g, ConfigId::C3, bogus), ValidationError);
}

TEST_CASE("gadget sizes") {
  Graph p = gen_path(5);
  CHECK(attach_gadget(p, 2, {GadgetKind::PendentTriangle}).graph.n() == 7);
  Attachment j1 = attach_gadget(p, 2, {GadgetKind::J1});
  CHECK(j1.graph.n() == 10);
  CHECK(j1.graph.m() == 4 + 7);
  Attachment j2 = attach_gadget(p, 2, {GadgetKind::J2});
  CHECK(j2.graph.n() == 15);
  CHECK(j2.graph.m() == 4 + 14);
  CHECK(attach_gadget(p, 0, {GadgetKind::AddEdge, 4}).graph.m() == 5);
  CHECK(attach_gadget(p, 0, {GadgetKind::AddPath2, 4}).graph.n() == 6);
  CHECK_THROWS_AS(attach_gadget(p, 9, {GadgetKind::J1}), ValidationError);
  CHECK_THROWS_AS(attach_gadget(p, 0, {GadgetKind::AddEdge, 1}), ValidationError);
}

TEST_CASE("grafting is non-invasive") {
  testing::Gen gen(6);
  for (int t = 0; t < 100; ++t) {
    Graph g = gen.gnp(gen.uniform(1, 10), 0.3);
    Vertex at = gen.uniform(0, g.n() - 1);
    for (GadgetKind k : {GadgetKind::PendentTriangle, GadgetKind::J1, GadgetKind::J2}) {
      Attachment a = attach_gadget(g, at, {k});
      Subgraph back = remove_vertices(a.graph, a.added);
      CHECK(back.graph.edges() == g.edges());
    }
  }
}

TEST_CASE("J1 and J2 force labels as the gadget lemma says") {
  // Pin the attachment vertex and enumerate every completion.
  Graph host = gen_path(3);
  Attachment j1 = attach_gadget(host, 1, {GadgetKind::J1});
  const Vertex w = j1.added[0];
  enumerate_fii(j1.graph, {}, FiiOptions{}, [&](const FiiPartition& p) {
    if (p.label[1] == 1) CHECK(p.label[w] == 2);
    if (p.label[1] == 2) CHECK(p.label[w] == 1);
    return true;
  });
  Attachment j2 = attach_gadget(host, 1, {GadgetKind::J2});
  std::uint64_t count = 0;
  enumerate_fii(j2.graph, {}, FiiOptions{}, [&](const FiiPartition& p) {
    ++count;
    CHECK(p.label[1] == 0);
    return true;
  });
  CHECK(count > 0);
}

TEST_CASE("gadget budgets keep mad at most 8/3") {
  testing::Gen gen(55);
  int tried = 0;
  for (int t = 0; t < 300; ++t) {
    Graph g = gen_mad_bounded(gen.uniform(3, 12), Rational(8, 3), 300 + t);
    Vertex at = gen.uniform(0, g.n() - 1);
    std::vector<Vertex> seed{at};
    std::int64_t r = rho_star(g, seed).value;
    for (GadgetKind k : {GadgetKind::PendentTriangle, GadgetKind::J1, GadgetKind::J2}) {
      if (r < gadget_budget(k)) continue;
      ++tried;
      CHECK(mad_le_8_3(attach_gadget(g, at, {k}).graph).holds);
    }
  }
  CHECK(tried > 200);
}

TEST_CASE("plans parse and print") {
  ReductionPlan p = ReductionPlan::parse("remove v N[u1] t* ; relabel v1 T[v1] ; triangle z1 ; j2 z2 ; edge a-b ; path2 c-d");
  CHECK(p.remove.size() == 3);
  CHECK(p.attach.size() == 2);
  CHECK(ReductionPlan::parse(p.to_string()).to_string() == p.to_string());
  CHECK_THROWS_AS(ReductionPlan::parse("delete v"), UsageError);
}

TEST_CASE("lemma check passes non-vacuously on every shipped instance") {
  for (ConfigId id : all_configs()) {
    Graph g = gen_config_instance(id);
    std::array<ConfigId, 1> one{id};
    auto matches = scan_configs(g, one);
    REQUIRE(!matches.empty());
    LemmaReport r = verify_lemma(g, matches.front());
    CHECK_MESSAGE(r.passed(), config_name(id), " ", r.plan);
    CHECK(r.reduced_partitions > 0);
    CHECK(r.extended == r.distinct_restrictions);
  }
}

TEST_CASE("lemma check: pendant vertex") {
  Graph g = gen_config_instance(ConfigId::C1);
  std::vector<Vertex> key{3};
  ConfigMatch m = rebuild_match(g, ConfigId::C1, key);
  LemmaReport r = verify_lemma_extension(g, m, ReductionPlan::parse("remove x"));
  CHECK(r.passed());
  CHECK(r.removed == std::vector<Vertex>{3});
}

TEST_CASE("lemma check reports a stuck partition") {
  // Deleting only one vertex of a W2 pair lets the other side fix a bad frame.
  Graph g = gen_g5n(1);
  auto matches = scan_configs(g);
  auto c2 = std::find_if(matches.begin(), matches.end(), [](const ConfigMatch& m) { return m.id == ConfigId::C2; });
  REQUIRE(c2 != matches.end());
  LemmaReport r = verify_lemma_extension(g, *c2, ReductionPlan::parse("remove u"));
  CHECK_FALSE(r.passed());
  CHECK((r.vacuous || r.counter_witness.has_value()));
}

TEST_CASE("plans naming absent roles are inapplicable") {
  Graph g = gen_config_instance(ConfigId::C1);
  ConfigMatch m = scan_configs(g).front();
  LemmaReport r = verify_lemma_extension(g, m, ReductionPlan::parse("remove nothing_here"));
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.passed());
}
