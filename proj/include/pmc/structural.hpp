#pragma once

#include "pmc/graph.hpp"
#include "pmc/treedepth.hpp"

#include <utility>
#include <vector>

namespace pmc {

/// Two reflexive partial orders on {0..m-1}, given as relation matrices.
struct TwoOrders {
  std::vector<std::vector<bool>> leq1;
  std::vector<std::vector<bool>> leq2;
  int size() const { return static_cast<int>(leq1.size()); }
};

class IncomparablePairError : public DomainError {
public:
  IncomparablePairError(int a, int b)
      : DomainError("elements " + std::to_string(a) + " and " + std::to_string(b) +
                    " are incomparable in both orders"),
        a_(a), b_(b) {}
  int first() const { return a_; }
  int second() const { return b_; }

private:
  int a_, b_;
};

// Least v with v <=1 x or v <=2 x for every x. DomainError when either
// relation is not a partial order, IncomparablePairError when some pair is
// comparable in neither.
int two_orders_min(const TwoOrders& t);

// Z inside a inducing a connected cograph with s - N(Z) complete to b.
// a and b are full components of the minimal separator s. Throws
// InducedPathError if an induced P7 shows up.
VertexSet find_cograph_dominator(const Graph& g, const VertexSet& s, const VertexSet& a,
                                 const VertexSet& b);

// X inside the full component a of s with |X| <= omega(g) such that each
// v in s - N(X) starts an induced path v-a-a-a.
VertexSet find_x_set(const Graph& g, const VertexSet& s, const VertexSet& a);

struct NeighborhoodCover {
  VertexSet q_z;
  VertexSet q_i;
};

// Q_Z inside z and Q_I inside i_set with j_set inside N(Q_Z) u N(Q_I).
// Preconditions are checked; a failing clause raises DomainError.
NeighborhoodCover cograph_neighborhood_cover(const Graph& g, const VertexSet& z,
                                             const VertexSet& i_set, const VertexSet& j_set);

long long factorial(int k);

struct KdlTriple {
  VertexSet k;
  std::vector<VertexSet> d_list;
  std::vector<VertexSet> l_map; // parallel to d_list
};

struct KdlReport {
  bool k_covers_separator = false; // S & T inside K and |K & T| <= budget
  bool d_are_components = false;
  bool l_are_module_splits = false;
  bool components_respected = false;
  bool all() const {
    return k_covers_separator && d_are_components && l_are_module_splits && components_respected;
  }
};

KdlReport check_kdl_triple(const Graph& g, const KdlTriple& triple, const VertexSet& s,
                           const TreedepthStructure& t, int td_budget);

// Module of g[within]: every vertex of within - m sees all of m or none.
bool is_module_within(const Graph& g, const VertexSet& within, const VertexSet& m);

} // namespace pmc
