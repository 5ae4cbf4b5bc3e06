#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "madstar/graph.hpp"
#include "madstar/rational.hpp"

namespace madstar {

struct Density {
  Rational value;               // 2|E(S)|/|S|
  std::vector<Vertex> witness;  // S, sorted, nonempty
};

struct PotentialResult {
  std::int64_t value = 0;
  std::vector<Vertex> minimizer;  // sorted
};

struct MadBoundCheck {
  bool holds = true;
  std::int64_t min_potential = 0;       // rho*(empty set)
  std::vector<Vertex> violating_set;    // nonempty iff !holds
};

// Exact maximum average degree by Dinkelbach iteration over min cuts.
Density mad(const Graph& g);

std::int64_t rho(const Graph& g, std::span<const Vertex> a);

// min { rho(K) : seed ⊆ K ⊆ V } by one min cut. The minimizer returned is the
// inclusion-minimal one.
PotentialResult rho_star(const Graph& g, std::span<const Vertex> seed);

// rho(A) >= 0 for every nonempty A, i.e. mad(g) <= 8/3.
MadBoundCheck mad_le_8_3(const Graph& g);

// mad(g) <= bound. On failure fills `violator` with a set of density > bound.
bool mad_at_most(const Graph& g, const Rational& bound, std::vector<Vertex>* violator = nullptr);

// min over forced ⊆ S ⊆ V of  per_vertex*|S| - per_edge*|E(S)|, per_edge >= 0.
PotentialResult min_linear_potential(const Graph& g, std::int64_t per_vertex, std::int64_t per_edge,
                                     std::span<const Vertex> forced);

}  // namespace madstar
