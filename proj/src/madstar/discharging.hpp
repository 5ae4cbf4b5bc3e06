#pragma once

#include <string>
#include <vector>

#include "madstar/configs.hpp"
#include "madstar/graph.hpp"
#include "madstar/rational.hpp"

namespace madstar {

enum class Rule : std::uint8_t { R1, R2, R3, R4 };
std::string_view rule_name(Rule r);

struct Transfer {
  Vertex from = -1;
  Vertex to = -1;
  Rational amount;
  Rule rule = Rule::R1;
};

struct ChargeTable {
  std::vector<Rational> initial;  // degree
  std::vector<Transfer> transfers;  // ordered by (from, to, rule)
  std::vector<Rational> final;

  Rational total_initial() const;
  Rational total_final() const;
};

// R1: a 3+-vertex sends 2/3 to each 2-neighbour on a pendent cycle.
// R2: a 3+-vertex sends 1/3 to each W2-neighbour.
// R3: a 3+-vertex sends 1/3 to each W3-neighbour.
// R4: a 4+-vertex sends 1/3 to each W5-neighbour.
// Rules are applied independently, so one pair may receive from several.
ChargeTable run_discharging(const Graph& g);

// Recomputes final charges from initial charges and the transfer log.
std::vector<Rational> replay_transfers(const ChargeTable& table);

struct NearbyConfig {
  ConfigId id;
  std::vector<Vertex> key;
  int distance = 0;  // from the audited vertex to the closest match vertex
};

struct AuditEntry {
  Vertex v = -1;
  std::string cls;
  Rational final;
  std::vector<NearbyConfig> nearby;  // matches of C1..C10 within distance 2
  std::string note;
};

struct AuditReport {
  Rational threshold{8, 3};
  bool conserved = true;
  Rational total;
  // Vertices ending below 8/3.
  std::vector<AuditEntry> deficits;
  // 7+-vertices ending at exactly 8/3; the case analysis expects them to end
  // strictly above, and C10 is what rules the equality out.
  std::vector<AuditEntry> tight;
};

AuditReport audit_final_charges(const Graph& g);

// A connected graph made of k >= 1 triangles sharing one vertex.
bool is_flower(const Graph& g, const std::vector<Vertex>& component, Vertex* center = nullptr);

}  // namespace madstar
