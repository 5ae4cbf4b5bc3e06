#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "madstar/fii.hpp"
#include "madstar/graph.hpp"
#include "madstar/rational.hpp"

namespace madstar {

struct NamedGraph {
  std::string id;
  Graph graph;
};

struct BoundaryEntry {
  std::string id;
  int n = 0;
  std::int64_t m = 0;
  Rational mad;
  SearchStatus status = SearchStatus::Unknown;
};

struct BoundaryReport {
  int k = 0;
  int n_max = 0;
  std::vector<BoundaryEntry> entries;  // ordered by graph id
  std::size_t skipped = 0;             // graphs above n_max or empty
  std::size_t feasible = 0, infeasible = 0, unknown = 0;
  // Smallest mad among infeasible graphs; an upper bound on h(k) from this
  // corpus, not its value.
  std::optional<Rational> min_infeasible_mad;
  std::string witness_id;
  std::optional<Rational> max_feasible_mad;
};

BoundaryReport boundary_search(int k, int n_max, std::span<const NamedGraph> corpus, const FiiOptions& options);

}  // namespace madstar
