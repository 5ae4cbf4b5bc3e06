#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "madstar/boundary.hpp"
#include "madstar/configs.hpp"
#include "madstar/density.hpp"
#include "madstar/discharging.hpp"
#include "madstar/fii.hpp"
#include "madstar/lemma.hpp"
#include "madstar/star.hpp"
#include "madstar/terminal.hpp"

namespace madstar {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"schema": 1} followed by the fields of `body`.
Json with_schema(const Json& body);
std::string dump_json(const Json& j);  // compact, one line, trailing newline

Json rational_json(const Rational& r);  // integer when whole, else "p/q"
Json graph_info_json(const Graph& g);
Json density_json(const Density& d);
Json potential_json(const PotentialResult& p, std::span<const Vertex> seed);
Json mad_check_json(const MadBoundCheck& c);
Json coloring_json(const Coloring& c);
Json star_check_json(const StarCheck& c, const Coloring& coloring);
Json star_result_json(const StarResult& r);
Json partition_json(const FiiPartition& p);
Json fii_check_json(const FiiCheck& c, int k);
Json fii_stats_json(const FiiStats& s);
Json fii_result_json(const FiiResult& r, int k);
Json boundary_json(const BoundaryReport& r);
Json match_json(const ConfigMatch& m);
Json lemma_json(const LemmaReport& r);
Json charge_table_json(const ChargeTable& t);
Json audit_json(const AuditReport& r);
Json terminal_json(const TerminalResult& r);

// Accepts a bare array of labels, {"labels": [...]}, {"partition": {...}},
// or part lists {"F": [...], "I_alpha": [...], "I_beta": [...]}. Labels may
// be integers or part names. Throws ValidationError.
FiiPartition partition_from_json(const Json& j, int n, int k);
// Accepts a bare array, {"colors": [...]} or {"coloring": {...}}.
Coloring coloring_from_json(const Json& j);
// {"config": "C5", "key": [...]}, or an element of a config-scan "matches" list.
ConfigMatch match_from_json(const Graph& g, const Json& j);

}  // namespace madstar
