#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "madstar/graph.hpp"

namespace madstar {

enum class VertexClass : std::uint8_t { W2, W3, W4, W5, V3, V4, V5, V6, PendentTriangle2Vertex, Other };

// "W2".."V6", "T" for pendent-triangle 2-vertices, "Other(d)" for the rest.
std::string class_label(VertexClass cls, int degree);

// A cycle whose vertices other than the apex all have degree 2 in the host.
// cycle_vertices starts with the apex and follows the cycle.
struct PendentCycle {
  Vertex apex;
  std::vector<Vertex> cycle_vertices;
  bool is_triangle() const { return cycle_vertices.size() == 3; }
};

// Walks every maximal chain of 2-vertices; a chain whose two ends meet at the
// same 3+-vertex is a pendent cycle. Free-standing cycles are not reported.
std::vector<PendentCycle> find_pendent_cycles(const Graph& g);
std::vector<PendentCycle> find_pendent_triangles(const Graph& g);

class Taxonomy {
 public:
  explicit Taxonomy(const Graph& g);
  explicit Taxonomy(Graph&&) = delete;

  const Graph& graph() const { return *g_; }
  VertexClass cls(Vertex v) const { return cls_[v]; }
  std::string label(Vertex v) const { return class_label(cls_[v], g_->degree(v)); }

  int degree(Vertex v) const { return g_->degree(v); }
  bool is(Vertex v, VertexClass c) const { return cls_[v] == c; }
  // Membership in a union such as W235: digits select W2..W5.
  bool in_w(Vertex v, std::string_view digits) const;
  bool is_w2(Vertex v) const { return is(v, VertexClass::W2); }
  bool is_w3(Vertex v) const { return is(v, VertexClass::W3); }
  bool is_w4(Vertex v) const { return is(v, VertexClass::W4); }
  bool is_w5(Vertex v) const { return is(v, VertexClass::W5); }

  // Number of pendent triangles with apex v.
  int pendent_triangles_at(Vertex v) const { return static_cast<int>(triangles_at_[v].size()); }
  // The 2-vertex pairs of pendent triangles with apex v.
  const std::vector<std::array<Vertex, 2>>& triangles_at(Vertex v) const { return triangles_at_[v]; }
  // True for a 2-vertex lying on some pendent cycle (any length).
  bool on_pendent_cycle(Vertex v) const { return on_cycle_[v]; }
  // True for a 2-vertex lying on a pendent triangle.
  bool on_pendent_triangle(Vertex v) const { return cls_[v] == VertexClass::PendentTriangle2Vertex; }
  // For a 2-vertex on a pendent cycle: the apex; otherwise -1.
  Vertex apex_of(Vertex v) const { return apex_of_[v]; }

  int count_neighbors(Vertex v, VertexClass c) const;
  int count_degree_neighbors(Vertex v, int degree) const;

  const std::vector<PendentCycle>& pendent_cycles() const { return cycles_; }

 private:
  const Graph* g_;
  std::vector<VertexClass> cls_;
  std::vector<std::vector<std::array<Vertex, 2>>> triangles_at_;
  std::vector<char> on_cycle_;
  std::vector<Vertex> apex_of_;
  std::vector<PendentCycle> cycles_;
};

}  // namespace madstar
