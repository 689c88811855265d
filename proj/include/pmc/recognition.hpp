#pragma once

#include "pmc/graph.hpp"

#include <optional>
#include <vector>

namespace pmc {

/// Ordered vertex list; consecutive vertices adjacent, all others not.
struct InducedPath {
  std::vector<int> vertices;
  friend bool operator==(const InducedPath&, const InducedPath&) = default;
};

/// Cyclically ordered vertex list. Canonical form starts at the minimum
/// vertex and continues towards its smaller cycle neighbour.
struct InducedCycle {
  std::vector<int> vertices;
  friend bool operator==(const InducedCycle&, const InducedCycle&) = default;
  friend auto operator<=>(const InducedCycle&, const InducedCycle&) = default;
};

constexpr int kMaxPathLength = 10;

// Lexicographically least induced path on exactly `length_at_least`
// vertices, or nullopt when g is P_t-free. Requires 2 <= t <= 10.
std::optional<InducedPath> find_induced_path(const Graph& g, int length_at_least);

// Induced path on `vertex_count` vertices that starts at `start` and
// continues inside `within` (start itself need not be in within).
std::optional<InducedPath> find_induced_path_from(const Graph& g, int start, const VertexSet& within,
                                                  int vertex_count);

// Some induced path on t vertices that passes through v.
std::optional<InducedPath> find_induced_path_through(const Graph& g, int v, int t);

inline bool is_pt_free(const Graph& g, int t) { return !find_induced_path(g, t).has_value(); }

bool is_induced_path(const Graph& g, const std::vector<int>& vertices);
bool is_induced_cycle(const Graph& g, const std::vector<int>& vertices);
InducedCycle canonical_cycle(std::vector<int> vertices);

// Maximum-cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

// Some induced cycle on at least five vertices, found by closing an induced
// P4 a-b-c-d through the part of the graph that avoids N[b] and N[c].
std::optional<InducedCycle> find_long_hole(const Graph& g);

// Chordal bipartite test for a bipartite graph with the given sides.
// Throws DomainError when the sides are not a bipartition of g.
bool is_chordal_bipartite(const Graph& g, const VertexSet& side1, const VertexSet& side2);
// Same, with the bipartition inferred; DomainError if g is not bipartite.
bool is_chordal_bipartite(const Graph& g);

// All induced 6-cycles, canonical and sorted.
std::vector<InducedCycle> enumerate_induced_c6(const Graph& g);
// The least canonical induced 6-cycle.
std::optional<InducedCycle> find_least_induced_c6(const Graph& g);

} // namespace pmc
