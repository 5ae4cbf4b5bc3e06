#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "madstar/graph.hpp"
#include "madstar/star.hpp"

namespace madstar {

// label[v] == 0 is F; label[v] == j in 1..k is I_j.
struct FiiPartition {
  int k = 2;
  std::vector<int> label;
};

std::string part_name(int label, int k);  // "F", "I_alpha", "I_beta" for k = 2, else "I_j"

struct FiiCheck {
  bool ok = true;
  enum class Kind { None, Cycle, Conflict } kind = Kind::None;
  std::vector<Vertex> cycle;   // closed F cycle, first vertex not repeated
  Vertex a = -1, b = -1;       // conflicting pair inside one I part
  int part = 0;
  int distance = 0;
};

// Throws ValidationError for a partial or out-of-range labeling.
FiiCheck verify_fii(const Graph& g, const FiiPartition& p);

enum class SearchStatus { Found, Infeasible, Unknown };
std::string_view status_name(SearchStatus s);

struct FiiOptions {
  int k = 2;
  bool forcing = true;  // J1/J2 propagation, k = 2 only
  std::optional<std::chrono::milliseconds> timeout;
  std::uint64_t node_limit = 0;  // 0 means unlimited
};

struct FiiStats {
  std::uint64_t nodes = 0;             // branching decisions
  std::uint64_t backtracks = 0;
  std::uint64_t propagated = 0;        // assignments made by unit propagation
  std::uint64_t forcing_events = 0;    // domain restrictions from the J1 rule
  std::uint64_t statically_forced = 0; // vertices pinned to F by the J2 rule
  bool exhausted = false;              // the whole tree was explored
};

struct FiiResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<FiiPartition> partition;
  FiiStats stats;
};

FiiResult find_fii(const Graph& g, const FiiOptions& options = {});

// `fixed[v]` is the required label or -1. Finds any completion.
FiiResult extend_fii(const Graph& g, std::span<const int> fixed, const FiiOptions& options = {});

// Calls `visit` on every FI_k-partition consistent with `fixed` (empty span:
// no constraint) until it returns false. Forcing rules are sound, so they do
// not change the set of solutions. Returns stats; status is Unknown only on
// timeout or node limit.
FiiResult enumerate_fii(const Graph& g, std::span<const int> fixed, const FiiOptions& options,
                        const std::function<bool(const FiiPartition&)>& visit);

// Per tree of G[F]: BFS from its smallest vertex, color by depth mod 3.
// I_j gets color 2 + j. Throws ValidationError for an invalid partition and
// Error if the result fails the star check.
Coloring fii_to_star_coloring(const Graph& g, const FiiPartition& p);

// J1 rule: for each vertex x, the neighbours w of x that have two
// vertex-disjoint triangles avoiding x. If x is in one I part, each such w is
// forced into the other.
std::vector<std::vector<Vertex>> j1_centers(const Graph& g);
// J2 rule: vertices v with a path v-w1-w2 where w1 is a J1 center relative to
// v and w2 is one relative to w1. Such v lie in F in every FII-partition.
std::vector<Vertex> j2_forced(const Graph& g);

}  // namespace madstar
