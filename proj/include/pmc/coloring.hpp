#pragma once

#include "pmc/graph.hpp"

#include <vector>

namespace pmc {

struct Coloring {
  std::vector<int> color_of; // 0-based colour per vertex
  int num_colors = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

// Proper colouring of a P_t-free graph with at most (t-1)^(omega-1) colours,
// built along induced paths grown from the least vertex of each component.
// Throws InducedPathError carrying an induced P_t if the construction meets one.
Coloring gyarfas_coloring(const Graph& g, int t);

// Class i holds the vertices of colour i.
std::vector<VertexSet> color_classes(const Coloring& c);

} // namespace pmc
