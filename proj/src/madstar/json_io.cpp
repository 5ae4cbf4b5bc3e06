#include "madstar/json_io.hpp"

#include <algorithm>

#include "madstar/errors.hpp"

namespace madstar {

Json with_schema(const Json& body) {
  Json out;
  out["schema"] = kSchemaVersion;
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

std::string dump_json(const Json& j) { return j.dump() + "\n"; }

Json rational_json(const Rational& r) {
  if (r.den() == 1) return r.num();
  return r.to_string();
}

Json graph_info_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["max_degree"] = g.max_degree();
  auto gi = girth(g);
  j["girth"] = gi ? Json(*gi) : Json("infinity");
  j["forest"] = is_forest(g);
  int comps = 0;
  component_ids(g, &comps);
  j["components"] = comps;
  if (g.has_names()) j["names"] = g.names();
  return j;
}

Json density_json(const Density& d) {
  Json j;
  j["value"] = rational_json(d.value);
  j["witness"] = d.witness;
  return j;
}

Json potential_json(const PotentialResult& p, std::span<const Vertex> seed) {
  Json j;
  j["value"] = p.value;
  j["seed"] = std::vector<Vertex>(seed.begin(), seed.end());
  j["witness"] = p.minimizer;
  return j;
}

Json mad_check_json(const MadBoundCheck& c) {
  Json j;
  j["holds"] = c.holds;
  j["min_potential"] = c.min_potential;
  if (!c.holds) j["witness"] = c.violating_set;
  return j;
}

Json coloring_json(const Coloring& c) {
  Json j;
  j["palette_size"] = c.palette_size;
  j["colors"] = c.colors;
  return j;
}

Json star_check_json(const StarCheck& c, const Coloring& coloring) {
  Json j;
  j["valid"] = c.ok;
  j["colors_used"] = coloring.palette_size;
  if (!c.ok) {
    j["violation"] = {{"kind", c.violation.size() == 2 ? "monochromatic_edge" : "bicolored_path"},
                      {"vertices", c.violation}};
  }
  return j;
}

namespace {

std::string_view star_status_name(StarStatus s) {
  switch (s) {
    case StarStatus::Found: return "found";
    case StarStatus::ExceedsLimit: return "exceeds_limit";
    case StarStatus::Timeout: return "unknown";
  }
  return "unknown";
}

Json vertex_list(const std::vector<Vertex>& v) { return Json(v); }

}  // namespace

Json star_result_json(const StarResult& r) {
  Json j;
  j["status"] = star_status_name(r.status);
  if (r.status == StarStatus::Found) {
    j["chi_s"] = r.chi;
    j["coloring"] = coloring_json(r.coloring);
  }
  j["nodes"] = r.nodes;
  return j;
}

Json partition_json(const FiiPartition& p) {
  Json j;
  j["k"] = p.k;
  j["labels"] = p.label;
  Json parts = Json::object();
  for (int part = 0; part <= p.k; ++part) {
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < p.label.size(); ++v)
      if (p.label[v] == part) members.push_back(static_cast<Vertex>(v));
    parts[part_name(part, p.k)] = members;
  }
  j["parts"] = parts;
  return j;
}

Json fii_check_json(const FiiCheck& c, int k) {
  Json j;
  j["valid"] = c.ok;
  if (c.kind == FiiCheck::Kind::Cycle) {
    j["violation"] = {{"kind", "cycle_in_F"}, {"cycle", c.cycle}};
  } else if (c.kind == FiiCheck::Kind::Conflict) {
    j["violation"] = {{"kind", "close_pair"},
                      {"part", part_name(c.part, k)},
                      {"vertices", std::vector<Vertex>{c.a, c.b}},
                      {"distance", c.distance}};
  }
  return j;
}

Json fii_stats_json(const FiiStats& s) {
  Json j;
  j["nodes"] = s.nodes;
  j["backtracks"] = s.backtracks;
  j["propagated"] = s.propagated;
  j["forcing_events"] = s.forcing_events;
  j["statically_forced"] = s.statically_forced;
  j["exhausted"] = s.exhausted;
  return j;
}

Json fii_result_json(const FiiResult& r, int k) {
  Json j;
  j["k"] = k;
  j["status"] = status_name(r.status);
  if (r.partition) j["partition"] = partition_json(*r.partition);
  j["certificate"] = fii_stats_json(r.stats);
  return j;
}

Json boundary_json(const BoundaryReport& r) {
  Json j;
  j["k"] = r.k;
  j["n_max"] = r.n_max;
  j["graphs"] = r.entries.size();
  j["skipped"] = r.skipped;
  j["feasible"] = r.feasible;
  j["infeasible"] = r.infeasible;
  j["unknown"] = r.unknown;
  j["min_infeasible_mad"] = r.min_infeasible_mad ? rational_json(*r.min_infeasible_mad) : Json(nullptr);
  j["witness"] = r.witness_id.empty() ? Json(nullptr) : Json(r.witness_id);
  j["max_feasible_mad"] = r.max_feasible_mad ? rational_json(*r.max_feasible_mad) : Json(nullptr);
  j["note"] = "empirical bound over this corpus only";
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"id", e.id}, {"n", e.n}, {"m", e.m}, {"mad", rational_json(e.mad)},
                       {"status", status_name(e.status)}});
  }
  j["entries"] = entries;
  return j;
}

Json match_json(const ConfigMatch& m) {
  Json j;
  j["config"] = config_name(m.id);
  if (!m.variant.empty()) j["variant"] = m.variant;
  j["key"] = m.key;
  Json roles = Json::object();
  for (const auto& [name, v] : m.roles) roles[name] = v;
  j["roles"] = roles;
  return j;
}

Json lemma_json(const LemmaReport& r) {
  Json j;
  j["config"] = config_name(r.id);
  j["variant"] = r.variant;
  j["plan"] = r.plan;
  j["applicable"] = r.applicable;
  if (!r.applicable) j["reason"] = r.inapplicable_reason;
  j["removed"] = vertex_list(r.removed);
  j["relabeled"] = vertex_list(r.relabeled);
  j["reduced"] = {{"n", r.reduced_n}, {"m", r.reduced_m}, {"mad_le_8_3", r.reduced_mad_ok}};
  j["partitions"] = r.reduced_partitions;
  j["distinct_restrictions"] = r.distinct_restrictions;
  j["extended"] = r.extended;
  j["complete"] = r.complete;
  j["vacuous"] = r.vacuous;
  j["all_extend"] = r.all_extend;
  j["passed"] = r.passed();
  if (r.counter_witness) j["counter_witness"] = *r.counter_witness;
  return j;
}

Json charge_table_json(const ChargeTable& t) {
  Json j;
  j["total_initial"] = rational_json(t.total_initial());
  j["total_final"] = rational_json(t.total_final());
  Json transfers = Json::array();
  for (const auto& tr : t.transfers)
    transfers.push_back({{"from", tr.from}, {"to", tr.to}, {"amount", rational_json(tr.amount)},
                         {"rule", rule_name(tr.rule)}});
  j["transfers"] = transfers;
  Json fin = Json::array();
  for (const auto& r : t.final) fin.push_back(rational_json(r));
  j["final"] = fin;
  return j;
}

namespace {

Json audit_entry_json(const AuditEntry& e) {
  Json j;
  j["vertex"] = e.v;
  j["class"] = e.cls;
  j["final"] = rational_json(e.final);
  Json nearby = Json::array();
  for (const auto& nc : e.nearby)
    nearby.push_back({{"config", config_name(nc.id)}, {"key", nc.key}, {"distance", nc.distance}});
  j["nearby"] = nearby;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace

Json audit_json(const AuditReport& r) {
  Json j;
  j["threshold"] = rational_json(r.threshold);
  j["conserved"] = r.conserved;
  j["total"] = rational_json(r.total);
  Json d = Json::array();
  for (const auto& e : r.deficits) d.push_back(audit_entry_json(e));
  j["deficits"] = d;
  Json t = Json::array();
  for (const auto& e : r.tight) t.push_back(audit_entry_json(e));
  j["tight"] = t;
  return j;
}

Json terminal_json(const TerminalResult& r) {
  Json j;
  j["applicable"] = r.applicable;
  if (!r.applicable) {
    j["violated"] = r.violated;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
  }
  const auto& t = *r.result;
  j["verified"] = r.verified;
  j["sets"] = {{"X", t.X},         {"Y_alpha", t.Y_alpha}, {"Y_beta", t.Y_beta}, {"W_X", t.W_X},
               {"W_alpha", t.W_alpha}, {"W_beta", t.W_beta}, {"T_X", t.T_X},     {"T_alpha", t.T_alpha},
               {"T_beta", t.T_beta}, {"Z", t.Z},           {"F0", t.F0},         {"special", t.special}};
  j["partition"] = partition_json(t.partition);
  return j;
}

namespace {

int label_from_json(const Json& v, int k) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    for (int part = 0; part <= k; ++part)
      if (part_name(part, k) == s) return part;
    if (s == "alpha" && k == 2) return 1;
    if (s == "beta" && k == 2) return 2;
  }
  throw ValidationError("bad partition label " + v.dump());
}

}  // namespace

FiiPartition partition_from_json(const Json& j, int n, int k) {
  if (j.is_object() && j.contains("partition")) return partition_from_json(j.at("partition"), n, k);
  FiiPartition p;
  p.k = k;
  if (j.is_object() && j.contains("k") && j.at("k").is_number_integer()) p.k = j.at("k").get<int>();
  const Json* labels = nullptr;
  if (j.is_array()) labels = &j;
  else if (j.is_object() && j.contains("labels")) labels = &j.at("labels");
  if (labels) {
    if (!labels->is_array()) throw ValidationError("labels must be an array");
    for (const auto& v : *labels) p.label.push_back(label_from_json(v, p.k));
    return p;
  }
  if (!j.is_object()) throw ValidationError("partition must be an array or an object");
  const Json& parts = j.contains("parts") ? j.at("parts") : j;
  p.label.assign(static_cast<std::size_t>(n), -1);
  for (auto it = parts.begin(); it != parts.end(); ++it) {
    int part = label_from_json(Json(it.key()), p.k);
    if (!it.value().is_array()) throw ValidationError("part " + it.key() + " must be an array");
    for (const auto& v : it.value()) {
      int x = v.get<int>();
      if (x < 0 || x >= n) throw ValidationError("vertex " + std::to_string(x) + " out of range");
      if (p.label[x] != -1) throw ValidationError("vertex " + std::to_string(x) + " in two parts");
      p.label[x] = part;
    }
  }
  return p;
}

Coloring coloring_from_json(const Json& j) {
  if (j.is_object() && j.contains("coloring")) return coloring_from_json(j.at("coloring"));
  const Json* colors = j.is_array() ? &j : (j.is_object() && j.contains("colors") ? &j.at("colors") : nullptr);
  if (!colors || !colors->is_array()) throw ValidationError("coloring must be an array or {\"colors\": [...]}");
  std::vector<int> c;
  for (const auto& v : *colors) {
    if (!v.is_number_integer()) throw ValidationError("color " + v.dump() + " is not an integer");
    c.push_back(v.get<int>());
  }
  return make_coloring(std::move(c));
}

ConfigMatch match_from_json(const Graph& g, const Json& j) {
  if (j.is_object() && j.contains("matches")) {
    const auto& ms = j.at("matches");
    if (!ms.is_array() || ms.empty()) throw ValidationError("no matches in input");
    return match_from_json(g, ms.front());
  }
  if (!j.is_object() || !j.contains("config") || !j.contains("key"))
    throw ValidationError("match needs \"config\" and \"key\"");
  ConfigId id = parse_config(j.at("config").get<std::string>());
  std::vector<Vertex> key = j.at("key").get<std::vector<Vertex>>();
  for (Vertex v : key)
    if (!g.valid(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  return rebuild_match(g, id, key);
}

}  // namespace madstar
