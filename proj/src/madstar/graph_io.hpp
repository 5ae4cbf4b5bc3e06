#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "madstar/graph.hpp"

namespace madstar {

enum class GraphFormat { Auto, Graph6, EdgeList, Dimacs };

GraphFormat parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat format);
// Guess from the file extension; Auto if unknown.
GraphFormat format_from_path(std::string_view path);
// Guess from content: DIMACS if a "p edge" line appears, graph6 if the first
// data line is a single printable token, else edge list.
GraphFormat sniff_format(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// One graph per non-empty line, optional ">>graph6<<" header per line.
std::vector<Graph> parse_graph6_corpus(std::string_view text);

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
Graph parse_dimacs(std::string_view text);
std::string to_dimacs(const Graph& g);

}  // namespace madstar
