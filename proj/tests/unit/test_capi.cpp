#include "doctest.h"

#include <string>

#include "json.hpp"
#include "madstar/madstar.h"

using Json = nlohmann::json;

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { madstar_string_free(s); }
  Json json() const { return Json::parse(s); }
};

madstar_graph* parse(const std::string& text, const char* format = nullptr) {
  madstar_graph* g = nullptr;
  REQUIRE(madstar_graph_parse(text.data(), text.size(), format, &g) == MADSTAR_OK);
  return g;
}

}  // namespace

TEST_CASE("c api: graph handles") {
  madstar_graph* g = parse("0 1\n1 2\n2 0\n", "edgelist");
  CHECK(madstar_graph_n(g) == 3);
  CHECK(madstar_graph_m(g) == 3);
  Owned text;
  REQUIRE(madstar_graph_serialize(g, "graph6", &text.s) == MADSTAR_OK);
  CHECK(std::string(text.s) == "Bw\n");
  madstar_graph_free(g);
  madstar_graph_free(nullptr);

  const int32_t edges[] = {0, 1, 1, 2};
  madstar_graph* p = nullptr;
  REQUIRE(madstar_graph_from_edges(3, edges, 2, &p) == MADSTAR_OK);
  CHECK(madstar_graph_m(p) == 2);
  madstar_graph_free(p);
}

TEST_CASE("c api: errors carry kind and detail") {
  madstar_graph* g = nullptr;
  const std::string bad = "0 1\n3 3\n";
  CHECK(madstar_graph_parse(bad.data(), bad.size(), "edgelist", &g) == MADSTAR_INPUT_ERROR);
  CHECK(g == nullptr);
  Json e = Json::parse(madstar_last_error());
  CHECK(e["error"] == "validation");
  CHECK(e["detail"].get<std::string>().find("3") != std::string::npos);

  CHECK(madstar_graph_parse("0 1", 3, "yaml", &g) == MADSTAR_INPUT_ERROR);
  Owned out;
  CHECK(madstar_mad(nullptr, &out.s) == MADSTAR_INPUT_ERROR);
  CHECK(madstar_generate("nonsense:1", &g) == MADSTAR_INPUT_ERROR);
}

TEST_CASE("c api: tightness family end to end") {
  madstar_graph* g = nullptr;
  REQUIRE(madstar_generate("g5n:1", &g) == MADSTAR_OK);
  Owned m;
  REQUIRE(madstar_mad(g, &m.s) == MADSTAR_OK);
  CHECK(m.json()["schema"] == 1);
  CHECK(m.json()["value"] == "46/17");
  Owned f;
  CHECK(madstar_fii_find(g, 2, 1, 0, &f.s) == MADSTAR_NEGATIVE);
  CHECK(f.json()["status"] == "infeasible");
  CHECK(f.json()["certificate"]["exhausted"] == true);
  Owned le;
  CHECK(madstar_mad_le_8_3(g, &le.s) == MADSTAR_NEGATIVE);
  madstar_graph_free(g);
}

TEST_CASE("c api: star and partition verification") {
  madstar_graph* g = parse("0 1\n1 2\n2 3\n");
  const int32_t bad[] = {0, 1, 0, 1};
  Owned v;
  CHECK(madstar_star_verify(g, bad, 4, &v.s) == MADSTAR_NEGATIVE);
  CHECK(v.json()["violation"]["vertices"].size() == 4);
  Owned ok;
  CHECK(madstar_star_verify_json(g, "[0,1,2,0]", &ok.s) == MADSTAR_OK);
  Owned s5;
  CHECK(madstar_star5(g, 0, &s5.s) == MADSTAR_OK);
  CHECK(s5.json()["star_valid"] == true);
  Owned fv;
  CHECK(madstar_fii_verify_json(g, 2, R"({"F":[0,1,2,3]})", &fv.s) == MADSTAR_OK);
  Owned partial;
  CHECK(madstar_fii_verify_json(g, 2, R"({"F":[0,1,2]})", &partial.s) == MADSTAR_INPUT_ERROR);
  Owned col;
  CHECK(madstar_star_color(g, 0, 0, 0, &col.s) == MADSTAR_OK);
  CHECK(col.json()["chi_s"] == 3);
  madstar_graph_free(g);
}

TEST_CASE("c api: configurations, lemma, gadgets, discharging") {
  madstar_graph* g = nullptr;
  REQUIRE(madstar_generate("host:C5", &g) == MADSTAR_OK);
  Owned scan;
  REQUIRE(madstar_config_scan(g, "C5", &scan.s) == MADSTAR_OK);
  Json match = scan.json()["matches"][0];
  Owned lemma;
  CHECK(madstar_lemma_check(g, nullptr, match.dump().c_str(), nullptr, 0, &lemma.s) == MADSTAR_OK);
  CHECK(lemma.json()["reports"][0]["passed"] == true);
  Owned audit;
  CHECK(madstar_discharge_audit(g, &audit.s) == MADSTAR_OK);
  Owned dc;
  CHECK(madstar_discharge(g, &dc.s) == MADSTAR_OK);
  CHECK(dc.json()["total_final"] == 2 * madstar_graph_m(g));

  madstar_graph* bigger = nullptr;
  Owned report;
  REQUIRE(madstar_attach(g, 0, "J1", -1, &bigger, &report.s) == MADSTAR_OK);
  CHECK(madstar_graph_n(bigger) == madstar_graph_n(g) + 5);
  CHECK(report.json()["budget"] == 1);
  madstar_graph_free(bigger);
  madstar_graph_free(g);
}

TEST_CASE("c api: identical calls give identical bytes") {
  madstar_graph* g = nullptr;
  REQUIRE(madstar_generate("mad-bounded:12:8/3:5", &g) == MADSTAR_OK);
  Owned a, b;
  REQUIRE(madstar_fii_find(g, 2, 1, 0, &a.s) == MADSTAR_OK);
  REQUIRE(madstar_fii_find(g, 2, 1, 0, &b.s) == MADSTAR_OK);
  CHECK(std::string(a.s) == std::string(b.s));
  madstar_graph_free(g);
}

TEST_CASE("c api: terminal partition and corpus") {
  madstar_graph* g = nullptr;
  REQUIRE(madstar_generate("terminal", &g) == MADSTAR_OK);
  Owned t;
  CHECK(madstar_terminal_partition(g, &t.s) == MADSTAR_OK);
  CHECK(t.json()["verified"] == true);
  madstar_graph_free(g);
  Owned c;
  REQUIRE(madstar_gen_corpus(5, 10, "8/3", 3, &c.s) == MADSTAR_OK);
  CHECK(c.json()["graphs"].size() == 5);
}
