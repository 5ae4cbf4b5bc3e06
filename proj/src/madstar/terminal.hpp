#pragma once

#include <optional>
#include <string>
#include <vector>

#include "madstar/fii.hpp"
#include "madstar/graph.hpp"

namespace madstar {

struct TerminalPartition {
  std::vector<Vertex> X, Y_alpha, Y_beta;
  std::vector<Vertex> W_X, W_alpha, W_beta;
  std::vector<Vertex> T_X, T_alpha, T_beta;
  std::vector<Vertex> Z;
  std::vector<Vertex> F0;  // non-isolated vertices of G[W23]
  // Components handled without the construction: forests (all F) and
  // flowers (centre in I_alpha, the rest in F).
  std::vector<Vertex> special;
  FiiPartition partition;
};

struct TerminalResult {
  bool applicable = false;
  std::string violated;  // name of the first failed precondition
  std::string detail;
  std::optional<TerminalPartition> result;
  bool verified = false;  // verify_fii on the assembled partition
};

TerminalResult build_terminal_partition(const Graph& g);

}  // namespace madstar
