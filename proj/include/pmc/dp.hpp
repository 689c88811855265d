#pragma once

#include "pmc/graph.hpp"
#include "pmc/problem.hpp"

#include <vector>

namespace pmc {

/**
 * Candidate bags for the block dynamic programme.
 *
 * An exact family holds every PMC of the graph; a block (N(C), C) may then
 * only use bags between N(C) and N(C) u C. A container family only promises
 * to contain the bags of some tree decomposition; bags are then clipped to
 * N(C) u C and merely have to contain N(C) and meet C.
 */
struct BagFamily {
  std::vector<VertexSet> bags;
  bool exact = true;

  // Deduplicated, canonical order.
  static BagFamily make(std::vector<VertexSet> bags, bool exact);
};

BagFamily pmc_family(const Graph& g);

// state_cap < 0 means no cap. With a cap, bag states holding more chosen
// vertices are skipped and the result is flagged conditional (a lower bound).
SolveResult solve_mwis(const Graph& g, const BagFamily& bags);
SolveResult solve_induced_forest(const Graph& g, const BagFamily& bags, int state_cap = -1);
SolveResult solve_max_degree(const Graph& g, const BagFamily& bags, int k, int state_cap = -1);
SolveResult solve(const Graph& g, const BagFamily& bags, Problem p, int k = 0, int state_cap = -1);

// Exact treewidth from the PMCs of g (n <= 64). The empty graph has width 0.
int treewidth_via_blocks(const Graph& g);

} // namespace pmc
