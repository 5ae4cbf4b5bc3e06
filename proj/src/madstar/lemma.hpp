#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "madstar/configs.hpp"
#include "madstar/fii.hpp"
#include "madstar/gadgets.hpp"

namespace madstar {

// A reduction as data. Entries are role tokens resolved against a match:
//   name        the role vertex
//   name*       every role whose name is `name` followed by a digit
//   N[name]     closed neighbourhood in g;  N(name) open neighbourhood
//   T[name]     2-vertices of the pendent triangles at the role vertex
struct ReductionPlan {
  std::vector<std::string> remove;   // the deleted set S
  std::vector<std::string> relabel;  // kept in H, but free when extending
  std::vector<std::pair<std::string, GadgetKind>> attach;  // triangle / J1 / J2
  std::vector<std::pair<std::string, std::string>> add_edges;
  std::vector<std::pair<std::string, std::string>> add_paths2;

  // One-line form: "remove a b ; relabel c ; triangle z ; j1 z ; edge a-b".
  std::string to_string() const;
  static ReductionPlan parse(std::string_view text);
};

struct CatalogEntry {
  ConfigId id;
  std::string variant;  // "*" matches any variant
  ReductionPlan plan;
};

const std::vector<CatalogEntry>& plan_catalog();
// Candidate plans for a match, in catalog order.
std::vector<ReductionPlan> plans_for(const ConfigMatch& match);

struct LemmaOptions {
  std::uint64_t max_partitions = 5'000'000;  // cap on enumerated partitions of H'
  std::optional<std::chrono::milliseconds> timeout;
};

struct LemmaReport {
  ConfigId id = ConfigId::C1;
  std::string variant;
  std::string plan;
  bool applicable = true;     // false when the plan cannot be realised on g
  std::string inapplicable_reason;
  std::vector<Vertex> removed;    // S, ids in g
  std::vector<Vertex> relabeled;  // R, ids in g
  int reduced_n = 0;
  std::int64_t reduced_m = 0;
  bool reduced_mad_ok = false;    // mad(H') <= 8/3
  std::uint64_t reduced_partitions = 0;
  std::uint64_t distinct_restrictions = 0;
  std::uint64_t extended = 0;
  bool complete = true;           // enumeration not cut short
  bool vacuous = false;           // H' has no FII-partition
  bool all_extend = false;
  // Restriction to g of a partition of H' that does not extend; -1 on S and R.
  std::optional<std::vector<int>> counter_witness;
  bool passed() const { return applicable && complete && !vacuous && all_extend; }
};

// Vertices of g a token list resolves to; sorted, unique.
std::vector<Vertex> resolve_tokens(const Graph& g, const ConfigMatch& match, const std::vector<std::string>& tokens);

LemmaReport verify_lemma_extension(const Graph& g, const ConfigMatch& match, const ReductionPlan& plan,
                                   const LemmaOptions& options = {});

// Tries every catalog plan for the match and returns the first that passes,
// or the last report when none does.
LemmaReport verify_lemma(const Graph& g, const ConfigMatch& match, const LemmaOptions& options = {});

}  // namespace madstar
