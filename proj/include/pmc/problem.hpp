#pragma once

#include "pmc/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace pmc {

enum class Problem { Mwis, InducedForest, MaxDegree };

std::string_view problem_name(Problem p);
std::optional<Problem> parse_problem(std::string_view name);

struct SolveResult {
  Problem problem = Problem::Mwis;
  int k = 0; // degree bound, MaxDegree only
  Weight weight{0};
  VertexSet witness;
  bool conditional = false;
  std::string reason;
};

// Witness re-check: independent set, induced forest, or induced subgraph of
// maximum degree at most k.
bool is_feasible(const Graph& g, Problem p, int k, const VertexSet& s);

} // namespace pmc
