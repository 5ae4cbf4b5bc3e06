#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "madstar/boundary.hpp"
#include "madstar/configs.hpp"
#include "madstar/graph.hpp"
#include "madstar/rational.hpp"

namespace madstar {

// Deterministic across platforms: only raw engine output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// 5n-cycle v0..v(5n-1), two pendent triangles on each vi with i mod 5 in
// {1,2,3}; triangle vertices follow in (i, first, second) order.
Graph gen_g5n(int n);
Graph gen_cycle(int k);
Graph gen_path(int k);
Graph gen_complete(int k);
Graph gen_petersen();
// k triangles sharing one vertex (vertex 0).
Graph gen_flower(int k);
Graph gen_random_tree(int n, std::uint64_t seed);
// Each pair independently with probability num/den.
Graph gen_gnp(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);
// Random edge insertion in shuffled pair order, rejecting any edge whose
// component would exceed the bound. Stops after max_edges accepted edges
// (negative: try every pair).
Graph gen_mad_bounded(int n, const Rational& bound, std::uint64_t seed, std::int64_t max_edges = -1);

// A small host containing the configuration, used for lemma checks and
// discharging audits.
Graph gen_config_instance(ConfigId id);
// A graph meeting the end-state structure of the terminal construction:
// W23 paths, independent V4/V5 vertices, W5 vertices and pendent triangles.
Graph gen_terminal_example();

enum class Family { G5n, Cycle, Path, Complete, Petersen, Flower, TreeRandom, Gnp, MadBoundedRandom, GadgetHost, Terminal };

struct FamilySpec {
  Family family = Family::G5n;
  int n = 1;
  Rational bound{8, 3};
  std::uint64_t seed = 0;
  std::int64_t max_edges = -1;
  ConfigId config = ConfigId::C1;

  // "g5n:2", "cycle:7", "path:5", "complete:4", "petersen", "flower:3",
  // "tree:10:3", "gnp:8:1/2:5", "mad-bounded:10:8/3:7", "host:C5", "terminal".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

Graph generate(const FamilySpec& spec);

// `count` graphs with mad <= bound and 2 <= n <= n_max; ids "mb-<index>".
std::vector<NamedGraph> gen_corpus(int count, int n_max, const Rational& bound, std::uint64_t seed);

// Corpora for the boundary experiments at k = 0, 1, 2.
std::vector<NamedGraph> builtin_boundary_corpus(int k, std::uint64_t seed);

}  // namespace madstar
