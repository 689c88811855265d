#pragma once

#include "pmc/dp.hpp"
#include "pmc/graph.hpp"
#include "pmc/problem.hpp"
#include "pmc/recognition.hpp"
#include "pmc/separators.hpp"
#include "pmc/treedepth.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pmc {

/// Graph with a fixed ordered bipartition; every edge crosses the sides.
struct BipartiteGraph {
  Graph g;
  VertexSet side1;
  VertexSet side2;

  // DomainError when side1 is not one side of a bipartition of g. Without
  // side1 the sides are inferred by 2-colouring.
  static BipartiteGraph make(Graph g, std::optional<VertexSet> side1 = std::nullopt);
  int side_of(int v) const { return side1.test(v) ? 1 : 2; }
};

// A minimal separator whose two sides are not complete to each other, or
// nullopt when none exists (then g is chordal bipartite).
std::optional<MinimalSeparator> separator_biclique_criterion(const BipartiteGraph& bg);

// Missing side1 x side2 pairs inside s.
std::vector<Edge> biclique_fill(const BipartiteGraph& bg, const VertexSet& s);
BipartiteGraph complete_separator(const BipartiteGraph& bg, const VertexSet& s);

struct CompletionStep {
  InducedCycle cycle;
  int x = -1;
  int y = -1;
  VertexSet separator;
  std::vector<Edge> added;
};

struct CompletionResult {
  BipartiteGraph graph;
  std::vector<CompletionStep> trace;
};

// The minimal separator used for the cycle c (canonical labelling c1..c6):
// it holds c1 and c4 and splits {c2,c3} from {c5,c6}.
VertexSet completion_separator(const Graph& g, const InducedCycle& c);

// Repeatedly completes the separator of the least induced C6 into a
// biclique. Unless it is already chordal bipartite the input must be
// P7-free (InducedPathError otherwise). With
// check_invariants every step is re-checked for new induced P7s and new
// induced C6s; a failure raises InvariantViolation.
CompletionResult complete_to_chordal_bipartite(const BipartiteGraph& bg, bool check_invariants = false);

/// Induced C6 with opposite, T-incomparable x in side 1 and y in side 2.
struct BadC6 {
  InducedCycle cycle;
  int x = -1;
  int y = -1;
  int depth_x = 0;
  int depth_y = 0;
};

std::vector<BadC6> find_bad_c6(const BipartiteGraph& bg, const TreedepthStructure& t);
// Order on depth pairs: lexicographic on (dx + dy, dx).
bool depth_order_less(std::pair<int, int> a, std::pair<int, int> b);
bool depth_order_less(const BadC6& a, const BadC6& b);
// The cycle of a bad C6 rotated so that it starts at x and y is the fourth vertex.
InducedCycle oriented_cycle(const BadC6& b);

struct C6Context {
  VertexSet s1;             // vertices seeing exactly c1, c3, c5
  VertexSet s2;             // vertices seeing exactly c2, c4, c6
  VertexSet main_remainder; // union of components of G - N[C] with >= 2 vertices
};

// Raises InvariantViolation if some neighbour of the main remainder lies
// outside s1 u s2 (impossible in a P7-free bipartite graph).
C6Context c6_context(const Graph& g, const InducedCycle& c);

// Some depth level of T meets a in two or more vertices.
bool is_t_rich(const VertexSet& a, const TreedepthStructure& t);
inline bool is_t_poor(const VertexSet& a, const TreedepthStructure& t) { return !is_t_rich(a, t); }

// No two vertex-disjoint, anticomplete induced paths a-b-c with a in A,
// b in B, c in C.
bool is_vv_free(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c);

struct PartitionBlock {
  int side = 1;
  VertexSet trace;   // N(v) & Z shared by the block
  VertexSet members;
};

// Nonempty classes of V - Z by side and neighbourhood in Z.
std::vector<PartitionBlock> neighborhood_partition(const BipartiteGraph& bg, const VertexSet& z);

struct CompletedSolve {
  SolveResult result;
  CompletionResult completion;
  int bag_count = 0;
};

// Completes bg, uses the PMCs of the completion as a container family for
// the original graph and runs the block DP. state_cap < 0 means no cap.
CompletedSolve solve_on_completed(const BipartiteGraph& bg, Problem problem, int k = 0, int state_cap = -1);

} // namespace pmc
