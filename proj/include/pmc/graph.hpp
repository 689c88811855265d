#pragma once

#include "pmc/vertex_set.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pmc {

// Exact vertex weight; ties between solutions must be decided exactly.
using Weight = boost::rational<std::int64_t>;

std::string to_string(const Weight& w);

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph on vertices 0..n-1 with bit-row adjacency and
 * strictly positive rational vertex weights (default 1).
 *
 * Graphs are immutable; with_edges() and friends return new graphs.
 */
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges, std::vector<Weight> weights = {});

  int n() const { return n_; }
  const VertexSet& neighbors(int v) const { return adj_.at(v); }
  bool adjacent(int u, int v) const { return adj_.at(u).test(v); }

  bool weighted() const { return weighted_; }
  const Weight& weight(int v) const { return weights_.at(v); }
  Weight weight(const VertexSet& s) const;
  const std::vector<Weight>& weights() const { return weights_; }

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all() const { return VertexSet::full(n_); }

  int edge_count() const { return m_; }
  std::vector<Edge> edges() const;
  int degree(int v) const { return adj_.at(v).count(); }

  Graph with_edges(std::span<const Edge> extra) const;
  Graph with_weights(std::vector<Weight> weights) const;

  // Induced subgraph relabelled to 0..|s|-1 in increasing vertex order.
  Graph induced(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b);

private:
  void add_edge_unchecked(int u, int v);

  int n_ = 0;
  int m_ = 0;
  bool weighted_ = false;
  std::vector<VertexSet> adj_;
  std::vector<Weight> weights_;
};

/// Disjoint modules covering V(G).
struct ModulePartition {
  std::vector<VertexSet> blocks;
};

// N(s) (open) or N[s] (closed).
VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed = false);

// Connected components of g[within], ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);

// Component of g[within] containing v.
VertexSet component_of(const Graph& g, const VertexSet& within, int v);

bool is_connected(const Graph& g, const VertexSet& within);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
// Every vertex of a adjacent to every vertex of b.
bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_module(const Graph& g, const VertexSet& m);
ModulePartition maximal_modules(const Graph& g);
// Same, for the subgraph g[within] (blocks are subsets of within).
ModulePartition maximal_modules(const Graph& g, const VertexSet& within);
Graph quotient(const Graph& g, const ModulePartition& parts);

Graph complement(const Graph& g);
std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& within);

// Exact clique number for n <= 64.
int clique_number(const Graph& g);
int clique_number(const Graph& g, const VertexSet& within);
bool is_cograph(const Graph& g, const VertexSet& within);

// 2-colouring; nullopt when g is not bipartite. In every component the
// minimum vertex goes to the first side.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

} // namespace pmc
