#include "madstar/fii.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "madstar/errors.hpp"
#include "madstar/union_find.hpp"

namespace madstar {

std::string part_name(int label, int k) {
  if (label == 0) return "F";
  if (k == 2) return label == 1 ? "I_alpha" : "I_beta";
  return "I_" + std::to_string(label);
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void check_labels(const Graph& g, const FiiPartition& p) {
  if (p.k < 0 || p.k > 30) throw ValidationError("k must lie in 0..30");
  if (p.label.size() != static_cast<std::size_t>(g.n()))
    throw ValidationError("partition has " + std::to_string(p.label.size()) + " labels for " +
                          std::to_string(g.n()) + " vertices");
  for (Vertex v = 0; v < g.n(); ++v)
    if (p.label[v] < 0 || p.label[v] > p.k)
      throw ValidationError("vertex " + std::to_string(v) + " has label " + std::to_string(p.label[v]) +
                            " outside 0.." + std::to_string(p.k));
}

// A path from `from` to `to` inside G[F] that does not use the edge (from, to).
std::vector<Vertex> forest_path(const Graph& g, const std::vector<int>& label, Vertex from, Vertex to) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -2);
  std::deque<Vertex> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (Vertex u : g.neighbors(v)) {
      if (label[u] != 0 || parent[u] != -2) continue;
      if (v == from && u == to) continue;
      parent[u] = v;
      queue.push_back(u);
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

FiiCheck verify_fii(const Graph& g, const FiiPartition& p) {
  check_labels(g, p);
  FiiCheck out;
  RollbackUnionFind uf(g.n());
  for (auto [u, v] : g.edges()) {
    if (p.label[u] != 0 || p.label[v] != 0) continue;
    if (!uf.unite(u, v)) {
      out.ok = false;
      out.kind = FiiCheck::Kind::Cycle;
      out.cycle = forest_path(g, p.label, u, v);
      return out;
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    int j = p.label[v];
    if (j == 0) continue;
    for (Vertex u : g.neighbors(v)) {
      if (u > v && p.label[u] == j) {
        out = {false, FiiCheck::Kind::Conflict, {}, v, u, j, 1};
        return out;
      }
    }
    for (Vertex u : ball2(g, v)) {
      if (u > v && p.label[u] == j) {
        out = {false, FiiCheck::Kind::Conflict, {}, v, u, j, g.adjacent(u, v) ? 1 : 2};
        return out;
      }
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> j1_centers(const Graph& g) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(g.n()));
  for (Vertex w = 0; w < g.n(); ++w) {
    auto nb = g.neighbors(w);
    if (nb.size() < 5) continue;
    // Triangle edges at w.
    std::vector<Edge> tri;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.adjacent(nb[i], nb[j])) tri.emplace_back(nb[i], nb[j]);
    for (Vertex x : nb) {
      bool found = false;
      for (std::size_t i = 0; i < tri.size() && !found; ++i) {
        auto [a, b] = tri[i];
        if (a == x || b == x) continue;
        for (std::size_t j = i + 1; j < tri.size() && !found; ++j) {
          auto [c, d] = tri[j];
          if (c == x || d == x) continue;
          found = c != a && c != b && d != a && d != b;
        }
      }
      if (found) out[x].push_back(w);
    }
  }
  return out;
}

std::vector<Vertex> j2_forced(const Graph& g) {
  auto centers = j1_centers(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    bool forced = false;
    for (Vertex w1 : centers[v]) {
      for (Vertex w2 : centers[w1])
        if (w2 != v) forced = true;
      if (forced) break;
    }
    if (forced) out.push_back(v);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class FiiSearch {
 public:
  FiiSearch(const Graph& g, std::span<const int> fixed, const FiiOptions& options)
      : g_(g), k_(options.k), options_(options), uf_(g.n()) {
    if (k_ < 0 || k_ > 30) throw UsageError("k must lie in 0..30");
    const int n = g.n();
    full_ = (1u << (k_ + 1)) - 1;
    domain_.assign(static_cast<std::size_t>(n), full_);
    label_.assign(static_cast<std::size_t>(n), -1);
    if (k_ > 0) {
      ball_.resize(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) ball_[v] = ball2(g, v);
    }
    forcing_ = options.forcing && k_ == 2;
    if (forcing_) centers_ = j1_centers(g);
    order_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    if (options.timeout) deadline_ = Clock::now() + *options.timeout;

    if (!fixed.empty()) {
      if (fixed.size() != static_cast<std::size_t>(n))
        throw ValidationError("fixed labeling has " + std::to_string(fixed.size()) + " entries for " +
                              std::to_string(n) + " vertices");
      for (Vertex v = 0; v < n; ++v) {
        if (fixed[v] < -1 || fixed[v] > k_) throw ValidationError("fixed label out of range at vertex " + std::to_string(v));
        if (fixed[v] >= 0) domain_[v] &= 1u << fixed[v];
      }
    }
    if (forcing_) {
      for (Vertex v : j2_forced(g)) {
        domain_[v] &= 1u;
        ++stats_.statically_forced;
      }
    }
  }

  // Returns false when the root is already contradictory.
  bool initialise() {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (domain_[v] == 0) return false;
      if (std::has_single_bit(domain_[v])) queue_.push_back(v);
    }
    return propagate();
  }

  // Depth-first search. `visit` returns true to stop.
  template <typename Visit>
  bool search(std::size_t pos, Visit&& visit) {
    while (pos < order_.size() && label_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) return visit(label_);
    if (stop_) return true;
    ++stats_.nodes;
    if ((options_.node_limit && stats_.nodes > options_.node_limit) ||
        (deadline_ && (stats_.nodes & 255) == 0 && Clock::now() > *deadline_)) {
      stop_ = true;
      aborted_ = true;
      return true;
    }
    Vertex v = order_[pos];
    for (int val = 0; val <= k_; ++val) {
      if (!(domain_[v] & (1u << val))) continue;
      Mark m = mark();
      bool ok = assign(v, val) && propagate();
      if (ok && search(pos + 1, visit)) return true;
      restore(m);
      ++stats_.backtracks;
    }
    return false;
  }

  FiiStats& stats() { return stats_; }
  bool aborted() const { return aborted_; }
  const std::vector<int>& labels() const { return label_; }

 private:
  struct Mark {
    std::size_t trail, assigned, uf;
  };
  Mark mark() const { return {trail_.size(), assigned_.size(), uf_.checkpoint()}; }
  void restore(const Mark& m) {
    while (trail_.size() > m.trail) {
      auto [v, old] = trail_.back();
      trail_.pop_back();
      domain_[v] = old;
    }
    while (assigned_.size() > m.assigned) {
      label_[assigned_.back()] = -1;
      assigned_.pop_back();
    }
    uf_.rollback(m.uf);
    queue_.clear();
  }

  void set_domain(Vertex v, unsigned d) {
    trail_.emplace_back(v, domain_[v]);
    domain_[v] = d;
    if (label_[v] < 0 && std::has_single_bit(d)) queue_.push_back(v);
  }

  bool remove(Vertex v, int val) {
    unsigned bit = 1u << val;
    if (!(domain_[v] & bit)) return true;
    if (label_[v] == val) return false;
    set_domain(v, domain_[v] & ~bit);
    return domain_[v] != 0;
  }

  bool restrict_to(Vertex v, int val) {
    unsigned bit = 1u << val;
    if (!(domain_[v] & bit)) return false;
    if (domain_[v] != bit) set_domain(v, bit);
    return true;
  }

  // F is admissible at v iff its F-neighbours lie in pairwise distinct trees.
  bool forest_ok(Vertex v) const {
    roots_.clear();
    for (Vertex u : g_.neighbors(v))
      if (label_[u] == 0) roots_.push_back(uf_.find(u));
    std::sort(roots_.begin(), roots_.end());
    return std::adjacent_find(roots_.begin(), roots_.end()) == roots_.end();
  }

  bool assign(Vertex v, int val) {
    if (val == 0 && !forest_ok(v)) return false;
    trail_.emplace_back(v, domain_[v]);
    domain_[v] = 1u << val;
    label_[v] = val;
    assigned_.push_back(v);
    if (val == 0) {
      for (Vertex u : g_.neighbors(v))
        if (label_[u] == 0) uf_.unite(u, v);
      for (Vertex u : g_.neighbors(v))
        if (label_[u] < 0 && (domain_[u] & 1u) && !forest_ok(u) && !remove(u, 0)) return false;
      return true;
    }
    for (Vertex u : ball_[v])
      if (!remove(u, val)) return false;
    if (forcing_) {
      for (Vertex w : centers_[v]) {
        ++stats_.forcing_events;
        if (!restrict_to(w, 3 - val)) return false;
      }
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      Vertex v = queue_.front();
      queue_.pop_front();
      if (label_[v] >= 0) continue;
      if (domain_[v] == 0) return false;
      int val = std::countr_zero(domain_[v]);
      ++stats_.propagated;
      if (!assign(v, val)) return false;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  FiiOptions options_;
  unsigned full_ = 0;
  std::vector<unsigned> domain_;
  std::vector<int> label_;
  std::vector<std::vector<Vertex>> ball_;
  std::vector<std::vector<Vertex>> centers_;
  bool forcing_ = false;
  std::vector<Vertex> order_;
  RollbackUnionFind uf_;
  std::vector<std::pair<Vertex, unsigned>> trail_;
  std::vector<Vertex> assigned_;
  std::deque<Vertex> queue_;
  mutable std::vector<int> roots_;
  std::optional<Clock::time_point> deadline_;
  FiiStats stats_;
  bool stop_ = false;
  bool aborted_ = false;
};

}  // namespace

FiiResult enumerate_fii(const Graph& g, std::span<const int> fixed, const FiiOptions& options,
                        const std::function<bool(const FiiPartition&)>& visit) {
  FiiSearch search(g, fixed, options);
  FiiResult result;
  bool any = false;
  bool stopped_by_visitor = false;
  if (search.initialise()) {
    search.search(0, [&](const std::vector<int>& labels) {
      any = true;
      FiiPartition p{options.k, labels};
      if (!visit(p)) {
        stopped_by_visitor = true;
        result.partition = std::move(p);
        return true;
      }
      return false;
    });
  }
  result.stats = search.stats();
  if (search.aborted()) {
    result.status = SearchStatus::Unknown;
  } else {
    result.stats.exhausted = !stopped_by_visitor;
    result.status = any ? SearchStatus::Found : SearchStatus::Infeasible;
  }
  return result;
}

FiiResult extend_fii(const Graph& g, std::span<const int> fixed, const FiiOptions& options) {
  auto r = enumerate_fii(g, fixed, options, [](const FiiPartition&) { return false; });
  if (r.partition && !verify_fii(g, *r.partition).ok) throw Error("solver produced an invalid partition");
  return r;
}

FiiResult find_fii(const Graph& g, const FiiOptions& options) { return extend_fii(g, {}, options); }

Coloring fii_to_star_coloring(const Graph& g, const FiiPartition& p) {
  auto check = verify_fii(g, p);
  if (!check.ok) throw ValidationError("not a valid FI_k-partition");
  std::vector<int> colors(static_cast<std::size_t>(g.n()), -1);
  for (Vertex root = 0; root < g.n(); ++root) {
    if (p.label[root] != 0) {
      colors[root] = 2 + p.label[root];
      continue;
    }
    if (colors[root] >= 0) continue;
    colors[root] = 0;
    std::deque<std::pair<Vertex, int>> queue{{root, 0}};
    while (!queue.empty()) {
      auto [v, depth] = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbors(v)) {
        if (p.label[u] != 0 || colors[u] >= 0) continue;
        colors[u] = (depth + 1) % 3;
        queue.emplace_back(u, depth + 1);
      }
    }
  }
  Coloring c;
  c.colors = std::move(colors);
  c.palette_size = p.k + 3;
  auto star = check_star_coloring(g, c);
  if (!star.ok) throw Error("converted coloring is not a star coloring");
  return c;
}

}  // namespace madstar
