#include "doctest.h"

#include <set>

#include "madstar/density.hpp"
#include "madstar/errors.hpp"
#include "madstar/generators.hpp"
#include "madstar/graph_io.hpp"
#include "test_support.hpp"

using namespace madstar;

TEST_CASE("rng is reproducible and unbiased enough") {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  std::vector<int> hist(6);
  for (int i = 0; i < 60000; ++i) ++hist[r.below(6)];
  for (int h : hist) CHECK(std::abs(h - 10000) < 600);
  CHECK_THROWS(r.below(0));
}

TEST_CASE("g5n") {
  Graph g = gen_g5n(1);
  CHECK(g.n() == 17);
  CHECK(g.m() == 23);
  Graph g2 = gen_g5n(2);
  CHECK(g2.n() == 34);
  CHECK(g2.m() == 46);
  // Cycle first, then triangles in (i, first, second) order.
  CHECK(g.adjacent(0, 4));
  CHECK(g.adjacent(1, 5));
  CHECK(g.adjacent(5, 6));
  CHECK(g.degree(1) == 6);
  CHECK_THROWS_AS(gen_g5n(0), UsageError);
}

TEST_CASE("small families") {
  CHECK(gen_cycle(7).m() == 7);
  CHECK(gen_path(1).m() == 0);
  CHECK(gen_complete(5).m() == 10);
  CHECK(gen_petersen().m() == 15);
  CHECK(gen_flower(3).n() == 7);
  Graph t = gen_random_tree(30, 9);
  CHECK(is_forest(t));
  CHECK(t.m() == 29);
}

TEST_CASE("mad-bounded graphs respect the bound and are deterministic") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_mad_bounded(10, Rational(8, 3), seed);
    CHECK(mad_le_8_3(g).holds);
    CHECK(gen_mad_bounded(10, Rational(8, 3), seed).edges() == g.edges());
    Graph f = gen_mad_bounded(10, Rational(2), seed);
    CHECK(mad(f).value <= Rational(2));
  }
  CHECK(mad_le_8_3(gen_mad_bounded(10, Rational(8, 3), 7)).holds);
  CHECK(gen_mad_bounded(12, Rational(8, 3), 3, 5).m() == 5);
  CHECK_THROWS_AS(gen_mad_bounded(5, Rational(1, 2), 1), UsageError);
}

TEST_CASE("family specs") {
  for (const char* s : {"g5n:2", "cycle:7", "path:5", "complete:4", "petersen", "flower:3", "tree:10:3",
                        "gnp:8:1/2:5", "mad-bounded:10:8/3:7", "mad-bounded:10:8/3:7:9", "host:C5", "terminal"}) {
    FamilySpec spec = FamilySpec::parse(s);
    CHECK(spec.to_string() == s);
    Graph a = generate(spec);
    CHECK(generate(FamilySpec::parse(s)).edges() == a.edges());
  }
  CHECK(FamilySpec::parse("host:C'1").to_string() == "host:Cp1");
  CHECK_THROWS_AS(FamilySpec::parse("cycle"), UsageError);
  CHECK_THROWS_AS(FamilySpec::parse("cycle:x"), UsageError);
  CHECK_THROWS_AS(FamilySpec::parse("moebius:3"), UsageError);
}

TEST_CASE("corpus") {
  auto c = gen_corpus(50, 14, Rational(8, 3), 42);
  REQUIRE(c.size() == 50);
  CHECK(c.front().id == "mb-00");
  std::set<std::string> ids;
  for (const auto& item : c) {
    ids.insert(item.id);
    CHECK(item.graph.n() <= 14);
    CHECK(mad_le_8_3(item.graph).holds);
  }
  CHECK(ids.size() == 50);
  auto again = gen_corpus(50, 14, Rational(8, 3), 42);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(to_graph6(again[i].graph) == to_graph6(c[i].graph));
}
