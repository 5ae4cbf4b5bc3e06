#include "madstar/madstar.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "madstar/boundary.hpp"
#include "madstar/configs.hpp"
#include "madstar/density.hpp"
#include "madstar/discharging.hpp"
#include "madstar/errors.hpp"
#include "madstar/fii.hpp"
#include "madstar/gadgets.hpp"
#include "madstar/generators.hpp"
#include "madstar/graph_io.hpp"
#include "madstar/json_io.hpp"
#include "madstar/lemma.hpp"
#include "madstar/star.hpp"
#include "madstar/taxonomy.hpp"
#include "madstar/terminal.hpp"

struct madstar_graph {
  madstar::Graph g;
};

using namespace madstar;

namespace {

thread_local std::string t_last_error = R"({"error":"none","detail":""})";

void set_error(std::string_view kind, std::string_view detail) {
  Json j;
  j["error"] = kind;
  j["detail"] = detail;
  t_last_error = j.dump();
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int emit(const Json& body, char** out_json, int status = MADSTAR_OK) {
  if (!out_json) {
    set_error("usage", "out_json is null");
    return MADSTAR_INPUT_ERROR;
  }
  *out_json = copy_string(with_schema(body).dump());
  return status;
}

std::optional<std::chrono::milliseconds> to_timeout(int64_t ms) {
  if (ms <= 0) return std::nullopt;
  return std::chrono::milliseconds(ms);
}

std::vector<Vertex> to_vertices(const int32_t* p, size_t len) {
  if (len > 0 && !p) throw UsageError("null vertex array with nonzero length");
  return std::vector<Vertex>(p, p + len);
}

void check_vertices(const Graph& g, const std::vector<Vertex>& vs) {
  for (Vertex v : vs)
    if (!g.valid(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
}

const Graph& graph_of(const madstar_graph* g) {
  if (!g) throw UsageError("graph handle is null");
  return g->g;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    set_error("parse", e.what());
    return MADSTAR_INPUT_ERROR;
  } catch (const ValidationError& e) {
    set_error("validation", e.what());
    return MADSTAR_INPUT_ERROR;
  } catch (const UsageError& e) {
    set_error("usage", e.what());
    return MADSTAR_INPUT_ERROR;
  } catch (const nlohmann::json::exception& e) {
    set_error("json", e.what());
    return MADSTAR_INPUT_ERROR;
  } catch (const std::bad_alloc&) {
    set_error("internal", "out of memory");
    return MADSTAR_INTERNAL;
  } catch (const std::exception& e) {
    set_error("internal", e.what());
    return MADSTAR_INTERNAL;
  } catch (...) {
    set_error("internal", "unknown exception");
    return MADSTAR_INTERNAL;
  }
}

int search_status(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return MADSTAR_OK;
    case SearchStatus::Infeasible: return MADSTAR_NEGATIVE;
    case SearchStatus::Unknown: return MADSTAR_TIMEOUT;
  }
  return MADSTAR_INTERNAL;
}

GraphFormat format_arg(const char* format) {
  if (!format || !*format) return GraphFormat::Auto;
  return parse_format_name(format);
}

madstar_graph* wrap(Graph g) { return new madstar_graph{std::move(g)}; }

}  // namespace

extern "C" {

MADSTAR_API const char* madstar_version(void) { return "1.0.0"; }

MADSTAR_API const char* madstar_last_error(void) { return t_last_error.c_str(); }

MADSTAR_API void madstar_string_free(char* s) { std::free(s); }

MADSTAR_API int madstar_graph_parse(const char* text, size_t len, const char* format, madstar_graph** out) {
  return guarded([&] {
    if (!out) throw UsageError("out is null");
    if (!text && len > 0) throw UsageError("text is null");
    std::string_view view(text ? text : "", len);
    GraphFormat f = format_arg(format);
    if (f == GraphFormat::Auto) f = sniff_format(view);
    *out = wrap(parse_graph(view, f));
    return MADSTAR_OK;
  });
}

MADSTAR_API int madstar_graph_from_edges(int32_t n, const int32_t* edges, size_t m, madstar_graph** out) {
  return guarded([&] {
    if (!out) throw UsageError("out is null");
    if (n < 0) throw ValidationError("negative vertex count");
    if (m > 0 && !edges) throw UsageError("edges is null");
    std::vector<Edge> list;
    for (size_t i = 0; i < m; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = wrap(graph_from_edges(n, list));
    return MADSTAR_OK;
  });
}

MADSTAR_API void madstar_graph_free(madstar_graph* g) { delete g; }

MADSTAR_API int32_t madstar_graph_n(const madstar_graph* g) { return g ? g->g.n() : -1; }

MADSTAR_API int64_t madstar_graph_m(const madstar_graph* g) { return g ? g->g.m() : -1; }

MADSTAR_API int madstar_graph_serialize(const madstar_graph* g, const char* format, char** out_text) {
  return guarded([&] {
    if (!out_text) throw UsageError("out_text is null");
    GraphFormat f = format_arg(format);
    if (f == GraphFormat::Auto) f = GraphFormat::Graph6;
    *out_text = copy_string(serialize_graph(graph_of(g), f));
    return MADSTAR_OK;
  });
}

MADSTAR_API int madstar_info(const madstar_graph* g, char** out_json) {
  return guarded([&] {
    const Graph& gr = graph_of(g);
    Json j = graph_info_json(gr);
    Taxonomy tax(gr);
    Json classes = Json::array();
    for (Vertex v = 0; v < gr.n(); ++v) classes.push_back(tax.label(v));
    j["classes"] = classes;
    Json tris = Json::array();
    for (const auto& pc : find_pendent_triangles(gr)) tris.push_back({{"apex", pc.apex}, {"cycle", pc.cycle_vertices}});
    j["pendent_triangles"] = tris;
    return emit(j, out_json);
  });
}

MADSTAR_API int madstar_mad(const madstar_graph* g, char** out_json) {
  return guarded([&] { return emit(density_json(mad(graph_of(g))), out_json); });
}

MADSTAR_API int madstar_rho(const madstar_graph* g, const int32_t* set, size_t len, int64_t* out_value) {
  return guarded([&] {
    if (!out_value) throw UsageError("out_value is null");
    *out_value = rho(graph_of(g), to_vertices(set, len));
    return MADSTAR_OK;
  });
}

MADSTAR_API int madstar_rho_star(const madstar_graph* g, const int32_t* seed, size_t len, char** out_json) {
  return guarded([&] {
    const Graph& gr = graph_of(g);
    auto s = to_vertices(seed, len);
    check_vertices(gr, s);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return emit(potential_json(rho_star(gr, s), s), out_json);
  });
}

MADSTAR_API int madstar_mad_le_8_3(const madstar_graph* g, char** out_json) {
  return guarded([&] {
    auto c = mad_le_8_3(graph_of(g));
    return emit(mad_check_json(c), out_json, c.holds ? MADSTAR_OK : MADSTAR_NEGATIVE);
  });
}

namespace {

int star_verify_impl(const Graph& g, const Coloring& c, char** out_json) {
  auto check = check_star_coloring(g, c);
  return emit(star_check_json(check, c), out_json, check.ok ? MADSTAR_OK : MADSTAR_NEGATIVE);
}

int fii_verify_impl(const Graph& g, const FiiPartition& p, char** out_json) {
  auto check = verify_fii(g, p);
  return emit(fii_check_json(check, p.k), out_json, check.ok ? MADSTAR_OK : MADSTAR_NEGATIVE);
}

}  // namespace

MADSTAR_API int madstar_star_verify(const madstar_graph* g, const int32_t* colors, size_t len, char** out_json) {
  return guarded([&] {
    if (len > 0 && !colors) throw UsageError("colors is null");
    return star_verify_impl(graph_of(g), make_coloring(std::vector<int>(colors, colors + len)), out_json);
  });
}

MADSTAR_API int madstar_star_verify_json(const madstar_graph* g, const char* coloring_json, char** out_json) {
  return guarded([&] {
    if (!coloring_json) throw UsageError("coloring is null");
    return star_verify_impl(graph_of(g), coloring_from_json(Json::parse(coloring_json)), out_json);
  });
}

MADSTAR_API int madstar_star_color(const madstar_graph* g, int32_t limit, int force, int64_t timeout_ms, char** out_json) {
  return guarded([&] {
    StarSearchOptions opts;
    opts.limit = limit;
    opts.force = force != 0;
    opts.timeout = to_timeout(timeout_ms);
    auto r = star_chromatic_number(graph_of(g), opts);
    int status = r.status == StarStatus::Found ? MADSTAR_OK
                 : r.status == StarStatus::ExceedsLimit ? MADSTAR_NEGATIVE
                                                        : MADSTAR_TIMEOUT;
    return emit(star_result_json(r), out_json, status);
  });
}

MADSTAR_API int madstar_star_greedy(const madstar_graph* g, char** out_json) {
  return guarded([&] {
    const Graph& gr = graph_of(g);
    auto c = greedy_star_coloring(gr, degeneracy_order(gr));
    Json j;
    j["valid"] = true;
    j["coloring"] = coloring_json(c);
    return emit(j, out_json);
  });
}

MADSTAR_API int madstar_fii_find(const madstar_graph* g, int32_t k, int forcing, int64_t timeout_ms, char** out_json) {
  return guarded([&] {
    FiiOptions opts;
    opts.k = k;
    opts.forcing = forcing != 0;
    opts.timeout = to_timeout(timeout_ms);
    auto r = find_fii(graph_of(g), opts);
    return emit(fii_result_json(r, k), out_json, search_status(r.status));
  });
}

MADSTAR_API int madstar_fii_verify(const madstar_graph* g, int32_t k, const int32_t* labels, size_t len, char** out_json) {
  return guarded([&] {
    if (len > 0 && !labels) throw UsageError("labels is null");
    FiiPartition p{k, std::vector<int>(labels, labels + len)};
    return fii_verify_impl(graph_of(g), p, out_json);
  });
}

MADSTAR_API int madstar_fii_verify_json(const madstar_graph* g, int32_t k, const char* partition_json, char** out_json) {
  return guarded([&] {
    if (!partition_json) throw UsageError("partition is null");
    const Graph& gr = graph_of(g);
    return fii_verify_impl(gr, partition_from_json(Json::parse(partition_json), gr.n(), k), out_json);
  });
}

MADSTAR_API int madstar_star5(const madstar_graph* g, int64_t timeout_ms, char** out_json) {
  return guarded([&] {
    const Graph& gr = graph_of(g);
    FiiOptions opts;
    opts.timeout = to_timeout(timeout_ms);
    auto r = find_fii(gr, opts);
    Json j;
    j["status"] = status_name(r.status);
    if (r.status != SearchStatus::Found) {
      j["certificate"] = fii_stats_json(r.stats);
      return emit(j, out_json, search_status(r.status));
    }
    Coloring c = fii_to_star_coloring(gr, *r.partition);
    auto check = check_star_coloring(gr, c);
    j["partition"] = partition_json(*r.partition);
    j["coloring"] = coloring_json(c);
    j["star_valid"] = check.ok;
    return emit(j, out_json, check.ok && c.palette_size <= 5 ? MADSTAR_OK : MADSTAR_INTERNAL);
  });
}

MADSTAR_API int madstar_boundary(int32_t k, int32_t n_max, const madstar_graph* const* graphs, const char* const* ids,
                                 size_t count, int builtin, uint64_t seed, int64_t timeout_ms, char** out_json) {
  return guarded([&] {
    if (k < 0) throw UsageError("k must be nonnegative");
    std::vector<NamedGraph> corpus;
    if (builtin) corpus = builtin_boundary_corpus(k, seed);
    if (count > 0 && !graphs) throw UsageError("graphs is null");
    for (size_t i = 0; i < count; ++i) {
      std::string id = ids && ids[i] ? std::string(ids[i]) : "g" + std::to_string(i);
      corpus.push_back({id, graph_of(graphs[i])});
    }
    FiiOptions opts;
    opts.timeout = to_timeout(timeout_ms);
    return emit(boundary_json(boundary_search(k, n_max, corpus, opts)), out_json);
  });
}

MADSTAR_API int madstar_config_scan(const madstar_graph* g, const char* ids, char** out_json) {
  return guarded([&] {
    const Graph& gr = graph_of(g);
    auto list = ids && *ids ? parse_config_list(ids) : all_configs();
    auto matches = scan_configs(gr, list);
    Json j;
    Json requested = Json::array();
    for (ConfigId id : list) requested.push_back(config_name(id));
    j["configs"] = requested;
    j["count"] = matches.size();
    Json arr = Json::array();
    for (const auto& m : matches) arr.push_back(match_json(m));
    j["matches"] = arr;
    return emit(j, out_json);
  });
}

MADSTAR_API int madstar_lemma_check(const madstar_graph* g, const char* config, const char* match_json_text,
                                    const char* plan, int64_t timeout_ms, char** out_json) {
  return guarded([&] {
    const Graph& gr = graph_of(g);
    std::vector<ConfigMatch> matches;
    if (match_json_text) {
      ConfigMatch m = match_from_json(gr, Json::parse(match_json_text));
      if (config && *config && parse_config(config) != m.id) throw ValidationError("match is not of the requested configuration");
      matches.push_back(std::move(m));
    } else {
      if (!config || !*config) throw UsageError("need a configuration or a match");
      ConfigId id = parse_config(config);
      matches = scan_configs(gr, std::span<const ConfigId>(&id, 1));
    }
    LemmaOptions opts;
    opts.timeout = to_timeout(timeout_ms);
    std::optional<ReductionPlan> custom;
    if (plan && *plan) custom = ReductionPlan::parse(plan);
    Json reports = Json::array();
    std::size_t passed = 0;
    bool timed_out = false;
    for (const auto& m : matches) {
      LemmaReport r = custom ? verify_lemma_extension(gr, m, *custom, opts) : verify_lemma(gr, m, opts);
      if (r.passed()) ++passed;
      if (!r.complete) timed_out = true;
      Json rj = lemma_json(r);
      rj["key"] = m.key;
      reports.push_back(rj);
    }
    Json j;
    if (config && *config) j["config"] = config_name(parse_config(config));
    j["matches"] = matches.size();
    j["passed"] = passed;
    j["reports"] = reports;
    int status = MADSTAR_OK;
    if (matches.empty() || passed < matches.size()) status = timed_out ? MADSTAR_TIMEOUT : MADSTAR_NEGATIVE;
    return emit(j, out_json, status);
  });
}

MADSTAR_API int madstar_attach(const madstar_graph* g, int32_t at, const char* gadget, int32_t other,
                               madstar_graph** out_graph, char** out_json) {
  return guarded([&] {
    const Graph& gr = graph_of(g);
    if (!out_graph) throw UsageError("out_graph is null");
    if (!gadget) throw UsageError("gadget is null");
    Gadget gd{parse_gadget(gadget), other};
    if (!gr.valid(at)) throw ValidationError("attachment vertex " + std::to_string(at) + " out of range");
    Attachment a = attach_gadget(gr, at, gd);
    std::vector<Vertex> seed{at};
    if (gd.kind == GadgetKind::AddEdge || gd.kind == GadgetKind::AddPath2) seed.push_back(other);
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    const bool host_ok = mad_le_8_3(gr).holds;
    const auto rs = rho_star(gr, seed);
    const int budget = gadget_budget(gd.kind);
    Json j;
    j["gadget"] = gadget_name(gd.kind);
    j["at"] = at;
    if (other >= 0 && (gd.kind == GadgetKind::AddEdge || gd.kind == GadgetKind::AddPath2)) j["other"] = other;
    j["added"] = a.added;
    j["n"] = a.graph.n();
    j["m"] = a.graph.m();
    j["budget"] = budget;
    j["rho_star"] = rs.value;
    j["host_mad_le_8_3"] = host_ok;
    j["mad_preserved_claimed"] = host_ok && rs.value >= budget;
    if (!(host_ok && rs.value >= budget)) j["warning"] = "budget precondition not met; mad <= 8/3 is not claimed";
    *out_graph = wrap(std::move(a.graph));
    return emit(j, out_json);
  });
}

MADSTAR_API int madstar_discharge(const madstar_graph* g, char** out_json) {
  return guarded([&] { return emit(charge_table_json(run_discharging(graph_of(g))), out_json); });
}

MADSTAR_API int madstar_discharge_audit(const madstar_graph* g, char** out_json) {
  return guarded([&] {
    auto r = audit_final_charges(graph_of(g));
    return emit(audit_json(r), out_json, r.conserved ? MADSTAR_OK : MADSTAR_INTERNAL);
  });
}

MADSTAR_API int madstar_terminal_partition(const madstar_graph* g, char** out_json) {
  return guarded([&] {
    auto r = build_terminal_partition(graph_of(g));
    int status = !r.applicable ? MADSTAR_NEGATIVE : r.verified ? MADSTAR_OK : MADSTAR_INTERNAL;
    return emit(terminal_json(r), out_json, status);
  });
}

MADSTAR_API int madstar_generate(const char* spec, madstar_graph** out) {
  return guarded([&] {
    if (!spec || !out) throw UsageError("null argument");
    *out = wrap(generate(FamilySpec::parse(spec)));
    return MADSTAR_OK;
  });
}

MADSTAR_API int madstar_gen_corpus(int32_t count, int32_t n_max, const char* bound, uint64_t seed, char** out_json) {
  return guarded([&] {
    Rational b = bound && *bound ? Rational::parse(bound) : Rational(8, 3);
    auto corpus = gen_corpus(count, n_max, b, seed);
    Json j;
    j["count"] = corpus.size();
    j["n_max"] = n_max;
    j["bound"] = rational_json(b);
    j["seed"] = seed;
    Json arr = Json::array();
    for (const auto& item : corpus) arr.push_back({{"id", item.id}, {"graph6", to_graph6(item.graph)}});
    j["graphs"] = arr;
    return emit(j, out_json);
  });
}

}  // extern "C"
