#pragma once

#include "pmc/graph.hpp"

#include <optional>
#include <vector>

namespace pmc {

struct MinimalSeparator {
  VertexSet vertices;
  // Components C of g - vertices with N(C) = vertices; at least two.
  std::vector<VertexSet> full_components;
};

struct Pmc {
  VertexSet vertices;
};

struct PmcCover {
  enum class Kind { ClosedNeighborhood, ComponentFamily };
  Kind kind = Kind::ClosedNeighborhood;
  int vertex = -1;                  // ClosedNeighborhood: omega = N[vertex]
  std::vector<VertexSet> d_list;    // ComponentFamily: omega = union of N(D)
};

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);

// True iff s has at least two full components. The empty set qualifies
// exactly when g is disconnected.
bool is_minimal_separator(const Graph& g, const VertexSet& s);

// Throws DomainError when s is not a minimal separator.
MinimalSeparator make_separator(const Graph& g, const VertexSet& s);

std::vector<MinimalSeparator> enumerate_minimal_separators(const Graph& g);
// Separator vertex sets only, canonical order.
std::vector<VertexSet> minimal_separator_sets(const Graph& g);

bool is_pmc(const Graph& g, const VertexSet& omega);

std::vector<Pmc> enumerate_pmcs(const Graph& g);
std::vector<VertexSet> pmc_sets(const Graph& g);

// Smallest cover witness for a PMC: some v with omega = N[v], otherwise a
// minimum family of components of g - omega whose neighbourhoods union to
// omega, of size at most cap.
std::optional<PmcCover> pmc_cover(const Graph& g, const VertexSet& omega, int cap);

// Set-system transversal ceiling for independent sets in a PMC of a
// P_t-free graph: 11 l^2 (l + 4) (l + 1)^2 with l = ceil(t/2).
long long dsw_ceiling(int t);

} // namespace pmc
