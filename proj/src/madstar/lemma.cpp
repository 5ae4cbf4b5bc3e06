#include "madstar/lemma.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "madstar/density.hpp"
#include "madstar/errors.hpp"
#include "madstar/taxonomy.hpp"

namespace madstar {

namespace {

// One plan per line: <config> <variant> | <clauses>.
constexpr const char* kCatalog = R"(
C1   *        | remove x
C2   *        | remove u v ; triangle u_out
C2   *        | remove u v ; triangle v_out
C3   *        | remove v v1 v2 v3
C4   *        | remove t1 t2
C5   *        | remove x y x1 x2 y1 y2
C6   *        | remove v v1 v2 x1 x2 ; triangle z0 z1 z2
C7   *        | remove v v1 v2 x1 x2 x3 x4 ; triangle z2 z4 ; path2 z2-z4
C7   *        | remove v v1 v2 x1 x2 x3 x4 ; triangle z1 z3 ; path2 z1-z3
C7   *        | remove v v1 v2 x1 x2 x3 x4 ; triangle z1 z4 ; path2 z1-z4
C7   *        | remove v v1 v2 x1 x2 x3 x4 ; triangle z2 z3 ; path2 z2-z3
C8   W2       | remove t1 t2 ; relabel v1
C8   W4       | remove t1 t2 ; relabel v1 T[v1]
C8   W5       | remove t1 t2 ; relabel v1 T[v1]
C8   W3       | remove v v1 t1 t2 x1 x2 ; triangle z1
C8   W3       | remove v v1 t1 t2 x1 x2 ; triangle z2
C8   W3       | remove v v1 t1 t2 x1 x2 ; j2 v2
C9   3-       | remove v t1 t2 t3 t4 ; relabel v1
C9   W5       | remove v t1 t2 t3 t4 ; relabel v1 T[v1]
C10  W23      | remove v t1 t2 t3 t4 t5 t6 ; relabel v1 ; triangle v1 v1
C10  W5       | remove v t1 t2 t3 t4 t5 t6 ; relabel v1 T[v1]
Cp1  plain    | remove u*
Cp1  mixed    | remove u* ; triangle z1 ; j1 z1
Cp2  distinct | remove u* v* t*
Cp2  X2-5     | remove u* v* ; triangle z1
Cp2  X2-5     | remove u* v* ; triangle z2
Cp2  X2-5     | remove u* v* ; triangle z3
Cp2  X2-5     | remove u* v* ; triangle z4
Cp2  X2-5     | remove u* v* ; triangle z5
Cp3  i        | remove N[u1] N[u2] ; edge u3-u4
Cp3  ii-W5    | remove v u1 u2 u3 N[u4]
Cp3  ii-W3    | remove v u1 u2 u3 x4a x4b
Cp3  iii      | remove N[v] N[u3] N[u4] ; edge z1-z2
Cp3  iii      | remove N[v] N[u3] N[u4] ; triangle z3a
Cp3  iii      | remove N[v] N[u3] N[u4] ; triangle z3b
Cp3  iii      | remove N[v] N[u3] N[u4] ; triangle z4a
Cp3  iii      | remove N[v] N[u3] N[u4] ; triangle z4b
Cp4  W2       | remove v t1 t2 u1 u2 u3
Cp4  W5       | remove v t1 t2 u1 u2 u3 N(u3)
Cp4  W3       | remove v t1 t2 u1 u2 x3 x4 ; relabel u3
Cp5  u2-W5    | remove N[v] N[u2]
Cp5  W2/W2    | remove N[v]
Cp5  W5/W2    | remove N[v] N[u1]
Cp5  W2/W3    | remove N[v] ; edge z2-z3
Cp5  W5/W3    | remove N[v] N[u1] ; edge z2-z3
)";

std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::pair<std::string, std::string> split_pair(const std::string& w) {
  auto dash = w.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == w.size())
    throw UsageError("expected a-b pair in plan, got '" + w + "'");
  return {w.substr(0, dash), w.substr(dash + 1)};
}

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> out;
  std::istringstream in(kCatalog);
  for (std::string line; std::getline(in, line);) {
    auto bar = line.find('|');
    if (bar == std::string::npos) continue;
    auto head = words(std::string_view(line).substr(0, bar));
    out.push_back({parse_config(head.at(0)), head.at(1), ReductionPlan::parse(std::string_view(line).substr(bar + 1))});
  }
  return out;
}

}  // namespace

std::string ReductionPlan::to_string() const {
  std::vector<std::string> clauses;
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += " " + x;
    return s;
  };
  if (!remove.empty()) clauses.push_back("remove" + join(remove));
  if (!relabel.empty()) clauses.push_back("relabel" + join(relabel));
  for (GadgetKind kind : {GadgetKind::PendentTriangle, GadgetKind::J1, GadgetKind::J2}) {
    std::vector<std::string> at;
    for (const auto& [role, k] : attach)
      if (k == kind) at.push_back(role);
    if (!at.empty()) clauses.push_back(std::string(kind == GadgetKind::PendentTriangle ? "triangle" : kind == GadgetKind::J1 ? "j1" : "j2") + join(at));
  }
  for (const auto& [a, b] : add_edges) clauses.push_back("edge " + a + "-" + b);
  for (const auto& [a, b] : add_paths2) clauses.push_back("path2 " + a + "-" + b);
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) out += (i ? " ; " : "") + clauses[i];
  return out;
}

ReductionPlan ReductionPlan::parse(std::string_view text) {
  ReductionPlan plan;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto clause = trim(text.substr(start, end - start));
    start = end + 1;
    if (clause.empty()) continue;
    auto w = words(clause);
    const std::string& kw = w[0];
    std::vector<std::string> args(w.begin() + 1, w.end());
    if (kw == "remove") plan.remove.insert(plan.remove.end(), args.begin(), args.end());
    else if (kw == "relabel") plan.relabel.insert(plan.relabel.end(), args.begin(), args.end());
    else if (kw == "triangle" || kw == "j1" || kw == "j2") {
      GadgetKind kind = kw == "triangle" ? GadgetKind::PendentTriangle : kw == "j1" ? GadgetKind::J1 : GadgetKind::J2;
      for (auto& a : args) plan.attach.emplace_back(a, kind);
    } else if (kw == "edge") {
      for (auto& a : args) plan.add_edges.push_back(split_pair(a));
    } else if (kw == "path2") {
      for (auto& a : args) plan.add_paths2.push_back(split_pair(a));
    } else {
      throw UsageError("unknown plan clause '" + kw + "'");
    }
  }
  return plan;
}

const std::vector<CatalogEntry>& plan_catalog() {
  static const std::vector<CatalogEntry> catalog = load_catalog();
  return catalog;
}

std::vector<ReductionPlan> plans_for(const ConfigMatch& match) {
  std::vector<ReductionPlan> out;
  for (const auto& e : plan_catalog())
    if (e.id == match.id && (e.variant == "*" || e.variant == match.variant)) out.push_back(e.plan);
  return out;
}

std::vector<Vertex> resolve_tokens(const Graph& g, const ConfigMatch& match, const std::vector<std::string>& tokens) {
  std::vector<Vertex> out;
  std::optional<Taxonomy> tax;
  for (const auto& tok : tokens) {
    if (tok.size() > 3 && (tok[1] == '[' || tok[1] == '(')) {
      std::string name = tok.substr(2, tok.size() - 3);
      Vertex v = match.at(name);
      if (tok[0] == 'N') {
        if (tok[1] == '[') out.push_back(v);
        for (Vertex u : g.neighbors(v)) out.push_back(u);
      } else if (tok[0] == 'T') {
        if (!tax) tax.emplace(g);
        for (const auto& t : tax->triangles_at(v)) {
          out.push_back(t[0]);
          out.push_back(t[1]);
        }
      } else {
        throw UsageError("unknown token '" + tok + "'");
      }
    } else if (!tok.empty() && tok.back() == '*') {
      std::string prefix = tok.substr(0, tok.size() - 1);
      for (const auto& [name, v] : match.roles)
        if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0 &&
            std::isdigit(static_cast<unsigned char>(name[prefix.size()])))
          out.push_back(v);
    } else {
      out.push_back(match.at(tok));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LemmaReport verify_lemma_extension(const Graph& g, const ConfigMatch& match, const ReductionPlan& plan,
                                   const LemmaOptions& options) {
  LemmaReport rep;
  rep.id = match.id;
  rep.variant = match.variant;
  rep.plan = plan.to_string();
  Subgraph h;
  GraphBuilder b;
  auto in_h = [&](const std::string& token) -> Vertex {
    Vertex v = match.at(token);
    Vertex hv = h.from_parent[v];
    if (hv < 0) throw ValidationError("role '" + token + "' is deleted by the plan");
    return hv;
  };
  try {
    rep.removed = resolve_tokens(g, match, plan.remove);
    rep.relabeled = resolve_tokens(g, match, plan.relabel);
    h = remove_vertices(g, rep.removed);
    b = to_builder(h.graph);
    for (const auto& [role, kind] : plan.attach) graft(b, in_h(role), Gadget{kind, -1});
    for (const auto& [x, y] : plan.add_edges) graft(b, in_h(x), Gadget{GadgetKind::AddEdge, in_h(y)});
    for (const auto& [x, y] : plan.add_paths2) graft(b, in_h(x), Gadget{GadgetKind::AddPath2, in_h(y)});
  } catch (const ValidationError& e) {
    rep.applicable = false;
    rep.inapplicable_reason = e.what();
    return rep;
  }
  Graph reduced = b.build();
  rep.reduced_n = reduced.n();
  rep.reduced_m = reduced.m();
  rep.reduced_mad_ok = reduced.n() == 0 || mad_le_8_3(reduced).holds;

  std::vector<char> free(g.n(), 0);
  for (Vertex v : rep.relabeled) free[v] = 1;
  std::set<std::vector<int>> seen;
  rep.all_extend = true;
  FiiOptions fo;
  fo.timeout = options.timeout;
  auto visit = [&](const FiiPartition& p) {
    ++rep.reduced_partitions;
    std::vector<int> fixed(g.n(), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
      Vertex hv = h.from_parent[v];
      if (hv >= 0 && !free[v]) fixed[v] = p.label[hv];
    }
    if (seen.insert(fixed).second) {
      ++rep.distinct_restrictions;
      FiiResult r = extend_fii(g, fixed);
      if (r.status == SearchStatus::Found) {
        ++rep.extended;
      } else {
        rep.all_extend = false;
        rep.counter_witness = fixed;
        return false;
      }
    }
    if (options.max_partitions && rep.reduced_partitions >= options.max_partitions) {
      rep.complete = false;
      return false;
    }
    return true;
  };
  FiiResult res = enumerate_fii(reduced, {}, fo, visit);
  if (res.status == SearchStatus::Unknown && rep.all_extend) rep.complete = false;
  rep.vacuous = rep.reduced_partitions == 0 && rep.complete;
  if (!rep.complete) rep.all_extend = false;
  return rep;
}

LemmaReport verify_lemma(const Graph& g, const ConfigMatch& match, const LemmaOptions& options) {
  auto plans = plans_for(match);
  if (plans.empty()) {
    LemmaReport rep;
    rep.id = match.id;
    rep.variant = match.variant;
    rep.applicable = false;
    rep.inapplicable_reason = "no catalog plan for variant '" + match.variant + "'";
    return rep;
  }
  LemmaReport last;
  for (const auto& plan : plans) {
    last = verify_lemma_extension(g, match, plan, options);
    if (last.passed()) return last;
  }
  return last;
}

}  // namespace madstar
