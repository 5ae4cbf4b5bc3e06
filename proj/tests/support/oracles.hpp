#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "madstar/density.hpp"
#include "madstar/fii.hpp"
#include "madstar/graph.hpp"
#include "madstar/star.hpp"

// Exhaustive reference implementations. They share no code with the fast
// solvers beyond the graph type and the validity checkers.
namespace madstar::oracle {

constexpr int kSubsetLimit = 24;

// Gray-code walk over all nonempty subsets.
Density mad_enumerate(const Graph& g);
// Gray-code walk over all supersets of the seed. Ties keep the first
// minimizer met, so only the value is canonical.
PotentialResult rho_star_enumerate(const Graph& g, std::span<const Vertex> seed);

// Shortest cycle by exhaustive simple-cycle enumeration (n small).
std::optional<int> girth_enumerate(const Graph& g);

// Minimum over all set partitions (restricted growth strings) that pass the
// star check.
int star_chromatic_enumerate(const Graph& g, std::vector<int>* coloring = nullptr);

// Every labeling in {0..k}^n in lexicographic order, filtered by verify_fii.
std::uint64_t fii_enumerate(const Graph& g, int k, const std::function<bool(const FiiPartition&)>& visit);

}  // namespace madstar::oracle
