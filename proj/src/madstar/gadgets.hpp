#pragma once

#include <string_view>
#include <vector>

#include "madstar/graph.hpp"

namespace madstar {

enum class GadgetKind { PendentTriangle, J1, J2, AddEdge, AddPath2 };

std::string_view gadget_name(GadgetKind kind);
GadgetKind parse_gadget(std::string_view name);

struct Gadget {
  GadgetKind kind = GadgetKind::PendentTriangle;
  Vertex other = -1;  // second endpoint for AddEdge / AddPath2
};

// How far the gadget can lower min potential: 1, 1, 2 for the pendent
// triangle, J1 and J2; 3 for an edge and 2 for a path of length two.
int gadget_budget(GadgetKind kind);

struct Attachment {
  Graph graph;
  std::vector<Vertex> added;  // new vertex ids, in creation order
};

// Grafts the gadget at `at`. Existing vertex ids are unchanged; new ones are
// appended. J1 adds its center w (adjacent to `at`) and two pendent triangles
// at w. J2 adds w1 adjacent to `at`, w2 adjacent to w1, two pendent triangles
// on each.
Attachment attach_gadget(const Graph& g, Vertex at, const Gadget& gadget);

// Same grafting on a builder in place; returns the new vertex ids.
std::vector<Vertex> graft(GraphBuilder& b, Vertex at, const Gadget& gadget);

GraphBuilder to_builder(const Graph& g);

}  // namespace madstar
