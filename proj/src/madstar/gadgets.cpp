#include "madstar/gadgets.hpp"

#include <string>

#include "madstar/errors.hpp"

namespace madstar {

std::string_view gadget_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::PendentTriangle: return "triangle";
    case GadgetKind::J1: return "J1";
    case GadgetKind::J2: return "J2";
    case GadgetKind::AddEdge: return "edge";
    case GadgetKind::AddPath2: return "path2";
  }
  return "triangle";
}

GadgetKind parse_gadget(std::string_view name) {
  if (name == "triangle" || name == "PendentTriangle" || name == "T") return GadgetKind::PendentTriangle;
  if (name == "J1" || name == "j1") return GadgetKind::J1;
  if (name == "J2" || name == "j2") return GadgetKind::J2;
  if (name == "edge" || name == "AddEdge") return GadgetKind::AddEdge;
  if (name == "path2" || name == "AddPath2") return GadgetKind::AddPath2;
  throw UsageError("unknown gadget '" + std::string(name) + "'");
}

int gadget_budget(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::PendentTriangle: return 1;
    case GadgetKind::J1: return 1;
    case GadgetKind::J2: return 2;
    case GadgetKind::AddEdge: return 3;
    case GadgetKind::AddPath2: return 2;
  }
  return 0;
}

GraphBuilder to_builder(const Graph& g) {
  GraphBuilder b(g.n());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  return b;
}

namespace {

void add_triangle(GraphBuilder& b, Vertex apex, std::vector<Vertex>& added) {
  Vertex a = b.add_vertex();
  Vertex c = b.add_vertex();
  b.add_edge(apex, a);
  b.add_edge(apex, c);
  b.add_edge(a, c);
  added.push_back(a);
  added.push_back(c);
}

Vertex add_center(GraphBuilder& b, Vertex attach_to, std::vector<Vertex>& added) {
  Vertex w = b.add_vertex();
  added.push_back(w);
  b.add_edge(attach_to, w);
  add_triangle(b, w, added);
  add_triangle(b, w, added);
  return w;
}

}  // namespace

std::vector<Vertex> graft(GraphBuilder& b, Vertex at, const Gadget& gadget) {
  if (at < 0 || at >= b.n()) throw ValidationError("attachment vertex " + std::to_string(at) + " out of range");
  std::vector<Vertex> added;
  switch (gadget.kind) {
    case GadgetKind::PendentTriangle: add_triangle(b, at, added); break;
    case GadgetKind::J1: add_center(b, at, added); break;
    case GadgetKind::J2: add_center(b, add_center(b, at, added), added); break;
    case GadgetKind::AddEdge:
      if (gadget.other < 0 || gadget.other >= b.n())
        throw ValidationError("edge endpoint " + std::to_string(gadget.other) + " out of range");
      b.add_edge(at, gadget.other);
      break;
    case GadgetKind::AddPath2: {
      if (gadget.other < 0 || gadget.other >= b.n())
        throw ValidationError("path endpoint " + std::to_string(gadget.other) + " out of range");
      if (gadget.other == at) throw ValidationError("path of length two needs distinct endpoints");
      Vertex mid = b.add_vertex();
      added.push_back(mid);
      b.add_edge(at, mid);
      b.add_edge(mid, gadget.other);
      break;
    }
  }
  return added;
}

Attachment attach_gadget(const Graph& g, Vertex at, const Gadget& gadget) {
  if (!g.valid(at)) throw ValidationError("attachment vertex " + std::to_string(at) + " out of range");
  GraphBuilder b = to_builder(g);
  Attachment out;
  out.added = graft(b, at, gadget);
  if (g.has_names()) {
    std::vector<std::string> names = g.names();
    for (Vertex v : out.added) names.push_back("+" + std::to_string(v));
    b.set_names(std::move(names));
  }
  out.graph = b.build();
  return out;
}

}  // namespace madstar
