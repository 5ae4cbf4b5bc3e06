#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "madstar/graph.hpp"

namespace madstar {

struct Coloring {
  std::vector<int> colors;
  int palette_size = 0;
};

Coloring make_coloring(std::vector<int> colors);

struct StarCheck {
  bool ok = true;
  // Two vertices: a monochromatic edge. Four vertices: a bicolored path.
  std::vector<Vertex> violation;
};

// Throws ValidationError if the coloring is partial or negative.
StarCheck check_star_coloring(const Graph& g, const Coloring& c);

// With colors[v] set and -1 marking uncolored vertices: true when v's color
// creates no monochromatic edge and no bicolored P4 among colored vertices.
bool star_extension_ok(const Graph& g, std::span<const int> colors, Vertex v);

// Smallest-last order reversed: the last vertex removed comes first.
std::vector<Vertex> degeneracy_order(const Graph& g);

enum class StarStatus { Found, ExceedsLimit, Timeout };

struct StarSearchOptions {
  int limit = 0;                 // 0 means no limit
  int max_vertices = 40;
  bool force = false;            // lift max_vertices
  std::optional<std::chrono::milliseconds> timeout;
};

struct StarResult {
  StarStatus status = StarStatus::Found;
  int chi = 0;
  Coloring coloring;
  std::uint64_t nodes = 0;
};

StarResult star_chromatic_number(const Graph& g, const StarSearchOptions& options = {});

Coloring greedy_star_coloring(const Graph& g, std::span<const Vertex> order);

}  // namespace madstar
