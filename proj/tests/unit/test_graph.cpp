#include "doctest.h"

#include <algorithm>
#include <set>

#include "madstar/errors.hpp"
#include "madstar/generators.hpp"
#include "madstar/graph.hpp"
#include "madstar/graph_io.hpp"
#include "madstar/taxonomy.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace madstar;
using testing::from_edges;

TEST_CASE("edge list: triangle") {
  Graph g = parse_edge_list("0 1\n1 2\n2 0\n");
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.adjacent(0, 2));
}

TEST_CASE("edge list: self-loop and duplicate are rejected") {
  CHECK_THROWS_AS(parse_edge_list("0 1\n3 3\n"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
}

TEST_CASE("edge list: labels keep numeric order, names survive") {
  Graph g = parse_edge_list("10 2\n2 7\n");
  REQUIRE(g.n() == 3);
  CHECK(g.name(0) == "2");
  CHECK(g.name(1) == "7");
  CHECK(g.name(2) == "10");
  CHECK(g.adjacent(0, 2));
  Graph h = parse_edge_list("b a\n");
  CHECK(h.name(0) == "b");
}

TEST_CASE("graph6: short inputs round-trip") {
  for (const char* s : {"D?{", "DQc", "D~{", "@", "A_", "Bw"}) {
    Graph g = parse_graph6(s);
    CHECK(to_graph6(g) == s);
  }
  CHECK(parse_graph6("D?{").n() == 5);
}

TEST_CASE("graph6: malformed input reports an offset") {
  try {
    parse_graph6("D?{{");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 0);
  }
  CHECK_THROWS_AS(parse_graph6("D\x01{"), ParseError);
}

TEST_CASE("round-trip in every format") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen.gnp(gen.uniform(1, 70), 0.15);
    for (GraphFormat f : {GraphFormat::Graph6, GraphFormat::EdgeList, GraphFormat::Dimacs}) {
      std::string text = serialize_graph(g, f);
      Graph h = parse_graph(text, f);
      CHECK(h.n() == g.n());
      CHECK(h.edges() == g.edges());
      CHECK(serialize_graph(h, f) == text);
      CHECK(parse_graph(text, sniff_format(text)).edges() == g.edges());
    }
  }
}

TEST_CASE("dimacs") {
  Graph g = parse_dimacs("c demo\np edge 4 2\ne 1 2\ne 3 4\n");
  CHECK(g.n() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
}

TEST_CASE("girth") {
  CHECK(girth(gen_cycle(3)) == 3);
  CHECK(!girth(gen_path(4)).has_value());
  CHECK(girth(gen_petersen()) == 5);
  CHECK(girth(gen_g5n(1)) == 3);
}

TEST_CASE("girth agrees with cycle enumeration") {
  testing::Gen gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = gen.gnp(gen.uniform(1, 8), 0.3);
    CHECK(girth(g) == oracle::girth_enumerate(g));
  }
}

TEST_CASE("pendent triangles") {
  CHECK(find_pendent_triangles(gen_cycle(3)).empty());
  Graph bowtie = from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  auto tris = find_pendent_triangles(bowtie);
  REQUIRE(tris.size() == 2);
  CHECK(tris[0].apex == 0);
  CHECK(tris[1].apex == 0);
  CHECK(find_pendent_triangles(gen_g5n(1)).size() == 6);
  CHECK(find_pendent_triangles(gen_g5n(3)).size() == 18);
}

TEST_CASE("pendent cycles longer than three") {
  Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}});
  auto cycles = find_pendent_cycles(g);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].apex == 0);
  CHECK(cycles[0].cycle_vertices == std::vector<Vertex>{0, 1, 2, 3});
  Taxonomy tax(g);
  CHECK(tax.on_pendent_cycle(2));
  CHECK(tax.is_w2(2));
}

TEST_CASE("taxonomy examples") {
  // Triangle 0-1-2 with two pendant edges at the apex.
  Graph w4 = from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}});
  Taxonomy t4(w4);
  CHECK(t4.is_w4(0));
  CHECK(t4.label(1) == "T");

  // K_{1,3} with two leaves subdivided.
  Graph spider = from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(Taxonomy(spider).is_w3(0));

  Graph cycle6 = gen_cycle(6);
  Taxonomy c6(cycle6);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6.is_w2(v));

  Graph g5graph = gen_g5n(1);
  Taxonomy g5(g5graph);
  CHECK(g5.pendent_triangles_at(1) == 2);
  CHECK(g5.pendent_triangles_at(3) == 2);
  CHECK_FALSE(g5.is_w5(1));
  CHECK(g5.is_w2(0));
  CHECK(g5.label(5) == "T");
}

TEST_CASE("taxonomy agrees with the definitions and covers every vertex once") {
  testing::Gen gen(3);
  std::vector<Graph> graphs = testing::atlas();
  for (int i = 0; i < 200; ++i) graphs.push_back(gen_mad_bounded(gen.uniform(4, 16), Rational(3), 900 + i));
  for (int i = 0; i < 15; ++i) graphs.push_back(gen_config_instance(static_cast<ConfigId>(i)));
  for (const Graph& g : graphs) {
    Taxonomy tax(g);
    for (Vertex v = 0; v < g.n(); ++v) CHECK(tax.label(v) == testing::naive_class(g, v));
  }
}

TEST_CASE("induced subgraph and vertex removal") {
  Graph g = gen_petersen();
  std::vector<Vertex> drop{0, 7};
  Subgraph s = remove_vertices(g, drop);
  CHECK(s.graph.n() == 8);
  CHECK(s.graph.m() == 15 - 6);
  CHECK(s.from_parent[0] == -1);
  CHECK(s.to_parent[0] == 1);
  std::vector<Vertex> keep{0, 1, 2, 3, 4};
  CHECK(induced_edge_count(g, keep) == 5);
}

TEST_CASE("ball2 and bfs") {
  Graph p = gen_path(6);
  CHECK(ball2(p, 2) == std::vector<Vertex>{0, 1, 3, 4});
  auto d = bfs_distances(p, 0);
  CHECK(d[5] == 5);
  auto cut = bfs_distances(p, 0, 2);
  CHECK(cut[3] == kUnreachable);
}

TEST_CASE("builder invariants") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(0, 0), ValidationError);
  CHECK_THROWS_AS(b.add_edge(0, 5), ValidationError);
  b.add_edge(0, 1);
  CHECK_FALSE(b.try_add_edge(1, 0));
  Graph g = b.build();
  std::int64_t sum = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    sum += g.degree(v);
    auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex u : nb) CHECK(g.adjacent(u, v));
  }
  CHECK(sum == 2 * g.m());
}
