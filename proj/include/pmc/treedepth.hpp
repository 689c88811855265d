#pragma once

#include "pmc/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace pmc {

/**
 * Rooted forest of height at most d on a subset of V(G).
 *
 * parent[v] is -1 for roots and for vertices outside the forest; depth[v]
 * is 0 outside the forest and 1 for roots.
 */
struct TreedepthStructure {
  int d = 0;
  VertexSet vertices;
  std::vector<int> parent;
  std::vector<int> depth;

  static TreedepthStructure empty(int n, int d);
  bool contains(int v) const { return vertices.test(v); }
  // v together with all its ancestors.
  VertexSet ancestors(int v) const;
  bool comparable(int u, int v) const;
  // Vertices of depth exactly alpha.
  VertexSet level(int alpha) const;

  friend bool operator==(const TreedepthStructure&, const TreedepthStructure&) = default;
};

// By vertex set (canonical_less), then depth vector, then parent vector.
bool structure_less(const TreedepthStructure& a, const TreedepthStructure& b);

bool is_treedepth_structure(const Graph& g, const TreedepthStructure& t);
// No vertex can be added as a new root or leaf within height d.
bool is_maximal(const Graph& g, const TreedepthStructure& t);

struct EnumeratedStructure {
  TreedepthStructure structure;
  bool maximal = false;
};

// Calls visit on every treedepth-d structure of g (the empty one included)
// until it returns false. Generation order is unspecified.
void for_each_treedepth_structure(const Graph& g, int d,
                                  const std::function<bool(const TreedepthStructure&)>& visit);
// First max_count structures in canonical order (max_count < 0: all).
// Without a count bound g may have at most 12 vertices.
std::vector<EnumeratedStructure> enumerate_treedepth_structures(const Graph& g, int d,
                                                                long long max_count = -1);

// Throws DomainError when g + fill is not chordal.
bool is_t_aligned(const Graph& g, const TreedepthStructure& t, const std::vector<Edge>& fill);

struct Container {
  VertexSet set;
  int defect = 0;
};

// |cand & T| - |s & T|, or nullopt when s is not inside cand.
std::optional<int> container_defect(const VertexSet& s, const VertexSet& cand,
                                    const TreedepthStructure& t);

struct TreeDecomposition {
  std::vector<int> parent; // -1 for the root node
  std::vector<VertexSet> bags;
  int width() const;
};

bool is_tree_decomposition(const Graph& g, const TreeDecomposition& td);
// Clique tree of a chordal graph; DomainError if h is not chordal.
TreeDecomposition clique_tree(const Graph& h);

int treedepth(const Graph& g);  // n <= 14
int treewidth(const Graph& g);  // n <= 64, via the PMC block DP
int degeneracy(const Graph& g);

// Every vertex of omega outside T has a neighbour in T - omega.
bool check_maximality_neighbor_property(const Graph& g, const TreedepthStructure& t,
                                        const VertexSet& omega);

} // namespace pmc
