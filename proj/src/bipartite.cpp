#include "pmc/bipartite.hpp"

#include <algorithm>
#include <map>

namespace pmc {

BipartiteGraph BipartiteGraph::make(Graph g, std::optional<VertexSet> side1) {
  if (!side1) {
    auto sides = bipartition(g);
    if (!sides)
      throw DomainError("graph is not bipartite");
    return BipartiteGraph{std::move(g), sides->first, sides->second};
  }
  if (side1->width() != g.n())
    throw DomainError("bipartition width does not match the graph");
  VertexSet side2 = ~*side1;
  for (const Edge& e : g.edges())
    if (side1->test(e.u) == side1->test(e.v))
      throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " does not cross the bipartition");
  return BipartiteGraph{std::move(g), *side1, side2};
}

std::vector<Edge> biclique_fill(const BipartiteGraph& bg, const VertexSet& s) {
  std::vector<Edge> out;
  for (int u : s & bg.side1)
    for (int v : (s & bg.side2) - bg.g.neighbors(u))
      out.push_back(Edge{std::min(u, v), std::max(u, v)});
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteGraph complete_separator(const BipartiteGraph& bg, const VertexSet& s) {
  std::vector<Edge> fill = biclique_fill(bg, s);
  if (fill.empty())
    return bg;
  return BipartiteGraph{bg.g.with_edges(fill), bg.side1, bg.side2};
}

std::optional<MinimalSeparator> separator_biclique_criterion(const BipartiteGraph& bg) {
  for (MinimalSeparator& s : enumerate_minimal_separators(bg.g))
    if (!biclique_fill(bg, s.vertices).empty())
      return std::move(s);
  return std::nullopt;
}

VertexSet completion_separator(const Graph& g, const InducedCycle& c) {
  const std::vector<int>& v = c.vertices;
  if (v.size() != 6 || !is_induced_cycle(g, v))
    throw ContractViolation("completion separator needs an induced C6");
  VertexSet far = neighborhood(g, VertexSet(g.n(), {v[4], v[5]}), true);
  VertexSet r = component_of(g, ~far, v[1]);
  VertexSet nr = neighborhood(g, r);
  VertexSet dy = component_of(g, ~nr, v[4]);
  VertexSet s = neighborhood(g, dy);
  if (!r.test(v[2]) || !s.test(v[0]) || !s.test(v[3]) || !is_minimal_separator(g, s))
    throw InvariantViolation("completion separator construction failed");
  return s;
}

CompletionResult complete_to_chordal_bipartite(const BipartiteGraph& bg, bool check_invariants) {
  CompletionResult out{bg, {}};
  if (is_chordal_bipartite(bg.g, bg.side1, bg.side2))
    return out;
  if (auto p = find_induced_path(bg.g, 7))
    throw InducedPathError(p->vertices, "completion input contains an induced P7");
  std::vector<InducedCycle> c6s;
  if (check_invariants)
    c6s = enumerate_induced_c6(bg.g);
  while (auto c = find_least_induced_c6(out.graph.g)) {
    const std::vector<int>& v = c->vertices;
    int x = out.graph.side1.test(v[0]) ? v[0] : v[3];
    int y = x == v[0] ? v[3] : v[0];
    VertexSet s = completion_separator(out.graph.g, *c);
    std::vector<Edge> fill = biclique_fill(out.graph, s);
    if (fill.empty())
      throw InvariantViolation("completion step added no edge");
    BipartiteGraph next{out.graph.g.with_edges(fill), out.graph.side1, out.graph.side2};
    if (check_invariants) {
      if (auto p = find_induced_path(next.g, 7))
        throw InvariantViolation("biclique completion created an induced P7");
      std::vector<InducedCycle> after = enumerate_induced_c6(next.g);
      if (!std::includes(c6s.begin(), c6s.end(), after.begin(), after.end()))
        throw InvariantViolation("biclique completion created a new induced C6");
      c6s = std::move(after);
    }
    out.trace.push_back(CompletionStep{*c, x, y, s, std::move(fill)});
    out.graph = std::move(next);
  }
  if (!is_chordal_bipartite(out.graph.g, out.graph.side1, out.graph.side2))
    throw InvariantViolation("completion ended without reaching a chordal bipartite graph");
  return out;
}

std::vector<BadC6> find_bad_c6(const BipartiteGraph& bg, const TreedepthStructure& t) {
  std::vector<BadC6> out;
  for (const InducedCycle& c : enumerate_induced_c6(bg.g))
    for (int i = 0; i < 3; ++i) {
      int a = c.vertices[i], b = c.vertices[i + 3];
      if (!t.contains(a) || !t.contains(b) || t.comparable(a, b))
        continue;
      int x = bg.side1.test(a) ? a : b;
      int y = x == a ? b : a;
      out.push_back(BadC6{c, x, y, t.depth[x], t.depth[y]});
    }
  return out;
}

bool depth_order_less(std::pair<int, int> a, std::pair<int, int> b) {
  return std::pair(a.first + a.second, a.first) < std::pair(b.first + b.second, b.first);
}

bool depth_order_less(const BadC6& a, const BadC6& b) {
  return depth_order_less(std::pair(a.depth_x, a.depth_y), std::pair(b.depth_x, b.depth_y));
}

InducedCycle oriented_cycle(const BadC6& b) {
  const std::vector<int>& v = b.cycle.vertices;
  auto at = std::find(v.begin(), v.end(), b.x) - v.begin();
  InducedCycle out;
  for (int j = 0; j < 6; ++j)
    out.vertices.push_back(v[(at + j) % 6]);
  return out;
}

C6Context c6_context(const Graph& g, const InducedCycle& c) {
  const std::vector<int>& v = c.vertices;
  if (v.size() != 6 || !is_induced_cycle(g, v))
    throw ContractViolation("c6_context needs an induced C6");
  VertexSet cyc = VertexSet::from(g.n(), v);
  VertexSet odd(g.n(), {v[0], v[2], v[4]}), even(g.n(), {v[1], v[3], v[5]});
  C6Context ctx{VertexSet(g.n()), VertexSet(g.n()), VertexSet(g.n())};
  for (int u : neighborhood(g, cyc)) {
    VertexSet seen = g.neighbors(u) & cyc;
    if (seen == odd)
      ctx.s1.set(u);
    else if (seen == even)
      ctx.s2.set(u);
  }
  for (const VertexSet& d : components(g, ~neighborhood(g, cyc, true)))
    if (d.count() >= 2)
      ctx.main_remainder |= d;
  if (!neighborhood(g, ctx.main_remainder).is_subset_of(ctx.s1 | ctx.s2))
    throw InvariantViolation("main remainder has a neighbour outside S1 u S2");
  return ctx;
}

bool is_t_rich(const VertexSet& a, const TreedepthStructure& t) {
  for (int alpha = 1; alpha <= t.d; ++alpha)
    if ((a & t.level(alpha)).count() > 1)
      return true;
  return false;
}

bool is_vv_free(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  std::vector<VertexSet> paths;
  for (int vb : b)
    for (int va : g.neighbors(vb) & a)
      for (int vc : g.neighbors(vb) & c)
        if (va != vc && !g.adjacent(va, vc))
          paths.push_back(VertexSet(g.n(), {va, vb, vc}));
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      if (!paths[i].intersects(paths[j]) && is_anticomplete_to(g, paths[i], paths[j]))
        return false;
  return true;
}

std::vector<PartitionBlock> neighborhood_partition(const BipartiteGraph& bg, const VertexSet& z) {
  std::map<std::pair<int, std::vector<int>>, PartitionBlock> blocks;
  for (int v : ~z) {
    int side = bg.side_of(v);
    VertexSet trace = bg.g.neighbors(v) & z;
    auto [it, fresh] = blocks.try_emplace({side, trace.to_vector()},
                                          PartitionBlock{side, trace, VertexSet(bg.g.n())});
    it->second.members.set(v);
  }
  std::vector<PartitionBlock> out;
  for (auto& [key, block] : blocks)
    out.push_back(std::move(block));
  return out;
}

CompletedSolve solve_on_completed(const BipartiteGraph& bg, Problem problem, int k, int state_cap) {
  CompletionResult completion = complete_to_chordal_bipartite(bg, false);
  BagFamily fam = BagFamily::make(pmc_sets(completion.graph.g), false);
  SolveResult r = solve(bg.g, fam, problem, k, state_cap);
  int bags = static_cast<int>(fam.bags.size());
  return CompletedSolve{std::move(r), std::move(completion), bags};
}

} // namespace pmc
