#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "madstar/graph.hpp"
#include "madstar/taxonomy.hpp"

namespace madstar {

enum class ConfigId : std::uint8_t { C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, Cp1, Cp2, Cp3, Cp4, Cp5 };

inline constexpr int kConfigCount = 15;

std::string_view config_name(ConfigId id);  // "C1".."C10", "Cp1".."Cp5"
// Accepts "C5", "Cp1", "C'1" and "C′1".
ConfigId parse_config(std::string_view name);
std::vector<ConfigId> parse_config_list(std::string_view comma_separated);
std::vector<ConfigId> all_configs();

struct ConfigMatch {
  ConfigId id = ConfigId::C1;
  // Sub-case of the configuration, e.g. the class of a distinguished neighbour.
  std::string variant;
  // Identity of the match: the vertices that define it, in role order
  // (cycle vertices in canonical order for the cycle configurations).
  std::vector<Vertex> key;
  // Role name to vertex, in a fixed order per configuration.
  std::vector<std::pair<std::string, Vertex>> roles;

  std::optional<Vertex> role(std::string_view name) const;
  Vertex at(std::string_view name) const;  // throws ValidationError if absent
  // Distinct role vertices, sorted.
  std::vector<Vertex> vertices() const;
};

// Matches are ordered by configuration, then key.
std::vector<ConfigMatch> scan_configs(const Graph& g, std::span<const ConfigId> ids);
std::vector<ConfigMatch> scan_configs(const Graph& g);

// Rebuilds the roles of a match from its id and key, checking the definition.
// Throws ValidationError when the key does not describe a match in g.
ConfigMatch rebuild_match(const Graph& g, ConfigId id, std::span<const Vertex> key);

// Simple cycles of the subgraph induced by `allowed`, each starting at its
// smallest vertex and continuing to the smaller of its two cycle neighbours.
// Stops after `limit` cycles.
std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, const std::vector<char>& allowed,
                                                std::size_t limit = 100000);

}  // namespace madstar
