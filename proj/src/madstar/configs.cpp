#include "madstar/configs.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "madstar/errors.hpp"

namespace madstar {

namespace {

constexpr std::array<std::string_view, kConfigCount> kNames = {
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "Cp1", "Cp2", "Cp3", "Cp4", "Cp5"};

using Roles = std::vector<std::pair<std::string, Vertex>>;

std::vector<Vertex> two_neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v))
    if (g.degree(u) == 2) out.push_back(u);
  return out;
}

// The neighbour of the 2-vertex x other than `from`.
Vertex other_end(const Graph& g, Vertex x, Vertex from) {
  auto nb = g.neighbors(x);
  return nb[0] == from ? nb[1] : nb[0];
}

// Neighbours of v that are not on a pendent triangle at v, sorted.
std::vector<Vertex> off_triangle_neighbors(const Taxonomy& tax, Vertex v) {
  std::vector<Vertex> skip;
  for (const auto& t : tax.triangles_at(v)) {
    skip.push_back(t[0]);
    skip.push_back(t[1]);
  }
  std::vector<Vertex> out;
  for (Vertex u : tax.graph().neighbors(v))
    if (std::find(skip.begin(), skip.end(), u) == skip.end()) out.push_back(u);
  return out;
}

void add_triangle_roles(const Taxonomy& tax, Vertex v, int first_index, Roles& roles) {
  int i = first_index;
  for (const auto& t : tax.triangles_at(v)) {
    roles.emplace_back("t" + std::to_string(i++), t[0]);
    roles.emplace_back("t" + std::to_string(i++), t[1]);
  }
}

// Roles for a W3 vertex u labelled with suffix s: x<s>a, x<s>b and the far
// ends z<s>a, z<s>b. `from` is the neighbour through which u was reached.
void add_w3_roles(const Graph& g, Vertex u, const std::string& s, Roles& roles) {
  auto xs = two_neighbors(g, u);
  const char* tag[2] = {"a", "b"};
  for (std::size_t i = 0; i < xs.size() && i < 2; ++i) roles.emplace_back("x" + s + tag[i], xs[i]);
  for (std::size_t i = 0; i < xs.size() && i < 2; ++i)
    roles.emplace_back("z" + s + tag[i], other_end(g, xs[i], u));
}

class Scanner {
 public:
  explicit Scanner(const Graph& g) : g_(g), tax_(g) {}

  void scan(ConfigId id, std::vector<ConfigMatch>& out) {
    std::vector<ConfigMatch> found;
    switch (id) {
      case ConfigId::C1: c1(found); break;
      case ConfigId::C2: c2(found); break;
      case ConfigId::C3: c3(found); break;
      case ConfigId::C4: c4(found); break;
      case ConfigId::C5: c5(found); break;
      case ConfigId::C6: c6(found); break;
      case ConfigId::C7: c7(found); break;
      case ConfigId::C8: c8(found); break;
      case ConfigId::C9: c9(found); break;
      case ConfigId::C10: c10(found); break;
      case ConfigId::Cp1: cp1(found); break;
      case ConfigId::Cp2: cp2(found); break;
      case ConfigId::Cp3: cp3(found); break;
      case ConfigId::Cp4: cp4(found); break;
      case ConfigId::Cp5: cp5(found); break;
    }
    for (auto& m : found) m.id = id;
    std::sort(found.begin(), found.end(), [](const ConfigMatch& a, const ConfigMatch& b) { return a.key < b.key; });
    for (auto& m : found) out.push_back(std::move(m));
  }

 private:
  static ConfigMatch make(std::vector<Vertex> key, Roles roles, std::string variant = {}) {
    ConfigMatch m;
    m.key = std::move(key);
    m.roles = std::move(roles);
    m.variant = std::move(variant);
    return m;
  }

  void c1(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v)
      if (g_.degree(v) <= 1) out.push_back(make({v}, {{"x", v}}));
  }

  void c2(std::vector<ConfigMatch>& out) {
    for (auto [u, v] : g_.edges()) {
      if (!tax_.is_w2(u) || !tax_.is_w2(v)) continue;
      out.push_back(make({u, v}, {{"u", u}, {"v", v}, {"u_out", other_end(g_, u, v)}, {"v_out", other_end(g_, v, u)}}));
    }
  }

  void c3(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 3) continue;
      auto xs = two_neighbors(g_, v);
      if (xs.size() != 3) continue;
      Roles r{{"v", v}};
      for (int i = 0; i < 3; ++i) r.emplace_back("v" + std::to_string(i + 1), xs[i]);
      for (int i = 0; i < 3; ++i) r.emplace_back("z" + std::to_string(i + 1), other_end(g_, xs[i], v));
      out.push_back(make({v}, std::move(r)));
    }
  }

  void c4(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 3 || tax_.pendent_triangles_at(v) == 0) continue;
      const auto& t = tax_.triangles_at(v)[0];
      Roles r{{"v", v}, {"t1", t[0]}, {"t2", t[1]}};
      auto rest = off_triangle_neighbors(tax_, v);
      if (!rest.empty()) r.emplace_back("u", rest[0]);
      out.push_back(make({v}, std::move(r)));
    }
  }

  void c5(std::vector<ConfigMatch>& out) {
    for (auto [x, y] : g_.edges()) {
      if (!tax_.is_w3(x) || !tax_.is_w3(y)) continue;
      auto xs = two_neighbors(g_, x);
      auto ys = two_neighbors(g_, y);
      Roles r{{"x", x}, {"y", y}, {"x1", xs[0]}, {"x2", xs[1]}, {"y1", ys[0]}, {"y2", ys[1]}};
      r.emplace_back("z1", other_end(g_, xs[0], x));
      r.emplace_back("z2", other_end(g_, xs[1], x));
      r.emplace_back("z3", other_end(g_, ys[0], y));
      r.emplace_back("z4", other_end(g_, ys[1], y));
      out.push_back(make({x, y}, std::move(r)));
    }
  }

  void c6(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 3) continue;
      for (Vertex v1 : g_.neighbors(v)) {
        if (!tax_.is_w3(v1)) continue;
        for (Vertex v2 : g_.neighbors(v)) {
          if (g_.degree(v2) != 2) continue;
          Vertex z0 = -1;
          for (Vertex w : g_.neighbors(v))
            if (w != v1 && w != v2) z0 = w;
          auto xs = two_neighbors(g_, v1);
          Roles r{{"v", v}, {"v1", v1}, {"v2", v2}, {"z0", z0}, {"x1", xs[0]}, {"x2", xs[1]}};
          r.emplace_back("z1", other_end(g_, xs[0], v1));
          r.emplace_back("z2", other_end(g_, xs[1], v1));
          r.emplace_back("z3", other_end(g_, v2, v));
          out.push_back(make({v, v1, v2}, std::move(r)));
        }
      }
    }
  }

  void c7(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 3) continue;
      auto nb = g_.neighbors(v);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          Vertex v1 = nb[i], v2 = nb[j];
          if (!tax_.is_w3(v1) || !tax_.is_w3(v2)) continue;
          Vertex z0 = nb[3 - i - j];
          auto a = two_neighbors(g_, v1);
          auto b = two_neighbors(g_, v2);
          Roles r{{"v", v}, {"v1", v1}, {"v2", v2}, {"z0", z0},
                  {"x1", a[0]}, {"x2", a[1]}, {"x3", b[0]}, {"x4", b[1]}};
          r.emplace_back("z1", other_end(g_, a[0], v1));
          r.emplace_back("z2", other_end(g_, a[1], v1));
          r.emplace_back("z3", other_end(g_, b[0], v2));
          r.emplace_back("z4", other_end(g_, b[1], v2));
          out.push_back(make({v, v1, v2}, std::move(r)));
        }
    }
  }

  void c8(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!tax_.is_w4(v)) continue;
      auto rest = off_triangle_neighbors(tax_, v);
      for (std::size_t i = 0; i < rest.size(); ++i) {
        Vertex v1 = rest[i];
        if (!tax_.in_w(v1, "2345")) continue;
        Roles r{{"v", v}};
        add_triangle_roles(tax_, v, 1, r);
        r.emplace_back("v1", v1);
        if (rest.size() == 2) r.emplace_back("v2", rest[1 - i]);
        if (tax_.is_w3(v1)) {
          auto xs = two_neighbors(g_, v1);
          r.emplace_back("x1", xs[0]);
          r.emplace_back("x2", xs[1]);
          r.emplace_back("z1", other_end(g_, xs[0], v1));
          r.emplace_back("z2", other_end(g_, xs[1], v1));
        }
        out.push_back(make({v, v1}, std::move(r), tax_.label(v1)));
      }
    }
  }

  void c9(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!tax_.is_w5(v)) continue;
      auto rest = off_triangle_neighbors(tax_, v);
      if (rest.size() != 1) continue;
      Vertex v1 = rest[0];
      bool w5 = tax_.is_w5(v1);
      if (!(g_.degree(v1) == 3 || tax_.is_w2(v1) || w5)) continue;
      Roles r{{"v", v}};
      add_triangle_roles(tax_, v, 1, r);
      r.emplace_back("v1", v1);
      out.push_back(make({v, v1}, std::move(r), w5 ? "W5" : "3-"));
    }
  }

  void c10(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 7 || tax_.pendent_triangles_at(v) != 3) continue;
      Vertex v1 = off_triangle_neighbors(tax_, v)[0];
      if (!tax_.in_w(v1, "235")) continue;
      Roles r{{"v", v}};
      add_triangle_roles(tax_, v, 1, r);
      r.emplace_back("v1", v1);
      int k = 1;
      for (Vertex z : g_.neighbors(v1))
        if (z != v && !tax_.is_w5(v1)) r.emplace_back("z" + std::to_string(k++), z);
      out.push_back(make({v, v1}, std::move(r), tax_.is_w5(v1) ? "W5" : "W23"));
    }
  }

  void cp1(std::vector<ConfigMatch>& out) {
    std::vector<char> allowed(g_.n(), 0);
    for (Vertex v = 0; v < g_.n(); ++v) allowed[v] = tax_.in_w(v, "23");
    for (auto& cyc : induced_cycles(g_, allowed)) {
      Roles r;
      for (std::size_t i = 0; i < cyc.size(); ++i) r.emplace_back("u" + std::to_string(i + 1), cyc[i]);
      int k = 1;
      for (Vertex u : cyc) {
        if (!tax_.is_w3(u)) continue;
        for (Vertex z : g_.neighbors(u))
          if (std::find(cyc.begin(), cyc.end(), z) == cyc.end()) r.emplace_back("z" + std::to_string(k++), z);
      }
      out.push_back(make(cyc, std::move(r), k > 1 ? "mixed" : "plain"));
    }
  }

  void cp2(std::vector<ConfigMatch>& out) {
    std::vector<char> allowed(g_.n(), 0);
    std::vector<Vertex> w23_neighbor(g_.n(), -1);
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (tax_.is_w4(v)) allowed[v] = 1;
      if (tax_.is(v, VertexClass::V3)) {
        for (Vertex u : g_.neighbors(v))
          if (tax_.in_w(u, "23")) {
            allowed[v] = 1;
            w23_neighbor[v] = u;
            break;
          }
      }
    }
    for (auto& cyc : induced_cycles(g_, allowed)) {
      Roles r;
      const std::size_t k = cyc.size();
      for (std::size_t i = 0; i < k; ++i) r.emplace_back("u" + std::to_string(i + 1), cyc[i]);
      std::vector<Vertex> used(cyc.begin(), cyc.end());
      bool distinct = true;
      bool all_x2 = true;
      auto claim = [&](Vertex x) {
        if (std::find(used.begin(), used.end(), x) != used.end()) distinct = false;
        used.push_back(x);
      };
      for (std::size_t i = 0; i < k; ++i) {
        Vertex u = cyc[i];
        std::string s = std::to_string(i + 1);
        if (tax_.is_w4(u)) {
          all_x2 = false;
          const auto& t = tax_.triangles_at(u)[0];
          r.emplace_back("s" + s + "a", t[0]);
          r.emplace_back("s" + s + "b", t[1]);
          continue;
        }
        // The W23 neighbour off the cycle.
        Vertex x = -1;
        for (Vertex w : g_.neighbors(u))
          if (std::find(cyc.begin(), cyc.end(), w) == cyc.end() && tax_.in_w(w, "23")) x = w;
        if (x < 0) x = w23_neighbor[u];
        r.emplace_back("v" + s, x);
        claim(x);
        if (tax_.is_w2(x)) {
          r.emplace_back("z" + s, other_end(g_, x, u));
        } else {
          all_x2 = false;
          auto ts = two_neighbors(g_, x);
          r.emplace_back("t" + s + "a", ts[0]);
          r.emplace_back("t" + s + "b", ts[1]);
          claim(ts[0]);
          claim(ts[1]);
          r.emplace_back("z" + s + "a", other_end(g_, ts[0], x));
          r.emplace_back("z" + s + "b", other_end(g_, ts[1], x));
        }
      }
      std::string variant = !distinct ? "shared" : (all_x2 && k == 5 ? "X2-5" : "distinct");
      out.push_back(make(cyc, std::move(r), variant));
    }
  }

  void cp3(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!tax_.is(v, VertexClass::V4)) continue;
      std::vector<Vertex> w2, w3, w5;
      bool ok = true;
      for (Vertex u : g_.neighbors(v)) {
        if (tax_.is_w2(u)) w2.push_back(u);
        else if (tax_.is_w3(u)) w3.push_back(u);
        else if (tax_.is_w5(u)) w5.push_back(u);
        else ok = false;
      }
      if (!ok || (w2.size() < 2 && w5.size() < 2)) continue;
      std::vector<Vertex> u;
      std::string variant;
      auto take = [&](std::vector<Vertex>& from, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) u.push_back(from[i]);
        from.erase(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(count));
      };
      if (w5.size() >= 2) {
        variant = "i";
        take(w5, 2);
        std::vector<Vertex> rest;
        for (auto* s : {&w2, &w3, &w5}) rest.insert(rest.end(), s->begin(), s->end());
        std::sort(rest.begin(), rest.end());
        u.insert(u.end(), rest.begin(), rest.end());
      } else if (w2.size() >= 3) {
        take(w2, 3);
        std::vector<Vertex> rest;
        for (auto* s : {&w2, &w3, &w5}) rest.insert(rest.end(), s->begin(), s->end());
        u.push_back(rest[0]);
        variant = "ii-" + tax_.label(rest[0]);
      } else {
        take(w2, 2);
        if (!w3.empty()) {
          take(w3, 1);
          std::vector<Vertex> rest;
          for (auto* s : {&w3, &w5}) rest.insert(rest.end(), s->begin(), s->end());
          u.push_back(rest[0]);
        }
        variant = "iii";
      }
      Roles r{{"v", v}};
      for (std::size_t i = 0; i < u.size(); ++i) r.emplace_back("u" + std::to_string(i + 1), u[i]);
      for (std::size_t i = 0; i < u.size(); ++i) {
        std::string s = std::to_string(i + 1);
        if (tax_.is_w2(u[i])) r.emplace_back("z" + s, other_end(g_, u[i], v));
        else if (tax_.is_w3(u[i])) add_w3_roles(g_, u[i], s, r);
      }
      out.push_back(make({v}, std::move(r), variant));
    }
  }

  void cp4(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 5 || tax_.pendent_triangles_at(v) != 1) continue;
      auto rest = off_triangle_neighbors(tax_, v);
      std::vector<Vertex> w2, others;
      bool ok = true;
      for (Vertex u : rest) {
        if (!tax_.in_w(u, "235")) ok = false;
        (tax_.is_w2(u) ? w2 : others).push_back(u);
      }
      if (!ok || w2.size() < 2) continue;
      Vertex u1 = w2[0], u2 = w2[1];
      Vertex u3 = w2.size() >= 3 ? w2[2] : others[0];
      Roles r{{"v", v}};
      add_triangle_roles(tax_, v, 1, r);
      r.emplace_back("u1", u1);
      r.emplace_back("u2", u2);
      r.emplace_back("u3", u3);
      r.emplace_back("z1", other_end(g_, u1, v));
      r.emplace_back("z2", other_end(g_, u2, v));
      if (tax_.is_w3(u3)) {
        auto xs = two_neighbors(g_, u3);
        r.emplace_back("x3", xs[0]);
        r.emplace_back("x4", xs[1]);
        r.emplace_back("z3", other_end(g_, xs[0], u3));
        r.emplace_back("z4", other_end(g_, xs[1], u3));
      } else if (tax_.is_w2(u3)) {
        r.emplace_back("z3", other_end(g_, u3, v));
      }
      out.push_back(make({v}, std::move(r), tax_.label(u3)));
    }
  }

  void cp5(std::vector<ConfigMatch>& out) {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) != 6 || tax_.pendent_triangles_at(v) != 2) continue;
      auto rest = off_triangle_neighbors(tax_, v);
      for (int i = 0; i < 2; ++i) {
        Vertex u1 = rest[i], u2 = rest[1 - i];
        if (!tax_.in_w(u1, "25") || !tax_.in_w(u2, "235")) continue;
        Roles r{{"v", v}};
        add_triangle_roles(tax_, v, 1, r);
        r.emplace_back("u1", u1);
        r.emplace_back("u2", u2);
        if (tax_.is_w2(u1)) r.emplace_back("z1", other_end(g_, u1, v));
        if (!tax_.is_w5(u2)) {
          int k = 2;
          for (Vertex z : g_.neighbors(u2))
            if (z != v) r.emplace_back("z" + std::to_string(k++), z);
        }
        std::string variant = tax_.is_w5(u2) ? "u2-W5" : tax_.label(u1) + "/" + tax_.label(u2);
        out.push_back(make({v, u1, u2}, std::move(r), variant));
      }
    }
  }

  const Graph& g_;
  Taxonomy tax_;
};

}  // namespace

std::string_view config_name(ConfigId id) { return kNames[static_cast<std::size_t>(id)]; }

ConfigId parse_config(std::string_view name) {
  std::string s(name);
  for (std::string_view prime : {"′", "'"}) {
    auto pos = s.find(prime);
    if (pos != std::string::npos) s.replace(pos, prime.size(), "p");
  }
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == s) return static_cast<ConfigId>(i);
  throw UsageError("unknown configuration '" + std::string(name) + "'");
}

std::vector<ConfigId> parse_config_list(std::string_view text) {
  std::vector<ConfigId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    if (!item.empty()) out.push_back(parse_config(item));
    start = end + 1;
  }
  if (out.empty()) throw UsageError("empty configuration list");
  return out;
}

std::vector<ConfigId> all_configs() {
  std::vector<ConfigId> out;
  for (int i = 0; i < kConfigCount; ++i) out.push_back(static_cast<ConfigId>(i));
  return out;
}

std::optional<Vertex> ConfigMatch::role(std::string_view name) const {
  for (const auto& [n, v] : roles)
    if (n == name) return v;
  return std::nullopt;
}

Vertex ConfigMatch::at(std::string_view name) const {
  auto v = role(name);
  if (!v) throw ValidationError("match has no role '" + std::string(name) + "'");
  return *v;
}

std::vector<Vertex> ConfigMatch::vertices() const {
  std::vector<Vertex> out;
  for (const auto& r : roles)
    if (r.second >= 0) out.push_back(r.second);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, const std::vector<char>& allowed,
                                                std::size_t limit) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> on_path(g.n(), 0);
  std::vector<Vertex> path;
  // Cycles through `start` using only allowed vertices greater than start;
  // each undirected cycle is found twice and kept when path[1] < path.back().
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex v) {
    if (out.size() >= limit) return;
    for (Vertex w : g.neighbors(v)) {
      if (!allowed[w]) continue;
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
        continue;
      }
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (Vertex s = 0; s < g.n() && out.size() < limit; ++s) {
    if (!allowed[s]) continue;
    path.assign(1, s);
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConfigMatch> scan_configs(const Graph& g, std::span<const ConfigId> ids) {
  std::vector<ConfigId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Scanner scanner(g);
  std::vector<ConfigMatch> out;
  for (ConfigId id : sorted) scanner.scan(id, out);
  return out;
}

std::vector<ConfigMatch> scan_configs(const Graph& g) {
  auto ids = all_configs();
  return scan_configs(g, ids);
}

ConfigMatch rebuild_match(const Graph& g, ConfigId id, std::span<const Vertex> key) {
  for (Vertex v : key)
    if (!g.valid(v)) throw ValidationError("match vertex " + std::to_string(v) + " out of range");
  std::array<ConfigId, 1> one{id};
  for (auto& m : scan_configs(g, one))
    if (std::equal(m.key.begin(), m.key.end(), key.begin(), key.end())) return m;
  throw ValidationError("no " + std::string(config_name(id)) + " match with the given key");
}

}  // namespace madstar
