#include "commands.hpp"

#include "pmc/bipartite.hpp"
#include "pmc/coloring.hpp"
#include "pmc/dp.hpp"
#include "pmc/oracles.hpp"
#include "pmc/separators.hpp"
#include "pmc/structural.hpp"

#include <algorithm>

namespace pmc::cli {

namespace {

std::vector<VertexSet> canon(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

VertexSet greedy_independent(const Graph& g, const VertexSet& within) {
  VertexSet out(g.n());
  for (int v : within)
    if (!g.neighbors(v).intersects(out))
      out.set(v);
  return out;
}

void check(InvariantReport& rep, const std::string& name, bool ok, const std::string& detail) {
  if (ok)
    rep.pass(name, detail);
  else
    rep.fail(name, detail);
}

void verify_enumeration(const Graph& g, InvariantReport& rep) {
  auto seps = minimal_separator_sets(g);
  auto pmcs = pmc_sets(g);
  long long a = static_cast<long long>(seps.size()), b = static_cast<long long>(pmcs.size());
  check(rep, "count_bounds", b <= g.n() * (a * a + a + 1) && a <= g.n() * b,
        std::to_string(a) + " separators, " + std::to_string(b) + " PMCs");
  if (g.n() > 12) {
    rep.skip("enumeration_vs_oracle", "oracle limited to 12 vertices");
    return;
  }
  check(rep, "enumeration_vs_oracle", canon(oracle_minseps(g)) == seps && canon(oracle_pmcs(g)) == pmcs, "");
}

void verify_solvers(const Graph& g, int k, InvariantReport& rep) {
  if (g.n() > 14) {
    rep.skip("solvers_vs_oracle", "oracle limited to 14 vertices");
    return;
  }
  BagFamily fam = pmc_family(g);
  std::string bad;
  for (Problem p : {Problem::Mwis, Problem::InducedForest, Problem::MaxDegree})
    if (solve(g, fam, p, k).weight != oracle_solve(g, p, k).weight)
      bad += std::string(problem_name(p)) + " ";
  check(rep, "solvers_vs_oracle", bad.empty(), bad.empty() ? "" : "mismatch: " + bad);
}

void verify_coloring(const Graph& g, InvariantReport& rep) {
  Coloring c = gyarfas_coloring(g, 7);
  long long bound = 1;
  for (int i = 1, w = clique_number(g); i < w; ++i)
    bound *= 6;
  check(rep, "path_coloring_bound", is_proper(g, c) && c.num_colors <= bound,
        std::to_string(c.num_colors) + " colours, bound " + std::to_string(bound));
}

void verify_structural(const Graph& g, InvariantReport& rep) {
  int omega = clique_number(g);
  int runs = 0;
  std::string bad;
  for (const MinimalSeparator& sep : enumerate_minimal_separators(g)) {
    const VertexSet& s = sep.vertices;
    for (const VertexSet& a : sep.full_components)
      for (const VertexSet& b : sep.full_components) {
        if (a == b)
          continue;
        ++runs;
        VertexSet z = find_cograph_dominator(g, s, a, b);
        if (!z.is_subset_of(a) || !is_connected(g, z) || !is_cograph(g, z) ||
            !is_complete_to(g, s - neighborhood(g, z), b))
          bad = "cograph dominator";
        VertexSet x = find_x_set(g, s, a);
        if (!x.is_subset_of(a) || x.count() > omega)
          bad = "x set";
        for (int v : s - neighborhood(g, x))
          if (!find_induced_path_from(g, v, a, 4))
            bad = "x set path";
        VertexSet i_set = greedy_independent(g, b);
        VertexSet j_set = greedy_independent(g, neighborhood(g, z) & neighborhood(g, i_set));
        NeighborhoodCover c = cograph_neighborhood_cover(g, z, i_set, j_set);
        long long cap = factorial(clique_number(g, z) + 1);
        if (c.q_z.count() > cap || c.q_i.count() > cap ||
            !j_set.is_subset_of(neighborhood(g, c.q_z) | neighborhood(g, c.q_i)))
          bad = "neighbourhood cover";
      }
  }
  check(rep, "structural_constructors", bad.empty(),
        bad.empty() ? std::to_string(runs) + " separator sides" : "failed: " + bad);
}

void verify_bipartite(const BipartiteGraph& bg, bool p7_free, InvariantReport& rep) {
  const Graph& g = bg.g;
  bool cb = is_chordal_bipartite(g, bg.side1, bg.side2);
  check(rep, "biclique_criterion", cb == !separator_biclique_criterion(bg).has_value(), "");
  if (!p7_free && !cb) {
    rep.skip("completion_invariants", "graph has an induced P7");
    return;
  }
  try {
    CompletionResult res = complete_to_chordal_bipartite(bg, true);
    check(rep, "completion_invariants", is_chordal_bipartite(res.graph.g, res.graph.side1, res.graph.side2),
          std::to_string(res.trace.size()) + " steps");
  } catch (const InvariantViolation& e) {
    rep.fail("completion_invariants", e.what());
  }
  if (!p7_free)
    return;
  int cycles = 0;
  std::string bad;
  for (const InducedCycle& c : enumerate_induced_c6(g)) {
    ++cycles;
    try {
      C6Context ctx = c6_context(g, c);
      std::vector<VertexSet> big;
      for (VertexSet& d : components(g, ctx.main_remainder))
        big.push_back(std::move(d));
      for (std::size_t i = 0; i < big.size(); ++i)
        for (std::size_t j = i + 1; j < big.size(); ++j)
          for (const VertexSet& side : {bg.side1, bg.side2}) {
            VertexSet p = neighborhood(g, big[i]) & side, q = neighborhood(g, big[j]) & side;
            if (!p.is_subset_of(q) && !q.is_subset_of(p))
              bad = "remainder neighbourhoods not nested";
          }
    } catch (const InvariantViolation& e) {
      bad = e.what();
    }
  }
  check(rep, "c6_remainder", bad.empty(), bad.empty() ? std::to_string(cycles) + " induced C6s" : bad);
}

} // namespace

RunReport cmd_verify(const Options& o) {
  RunReport r{"verify", load_input(o.input, o.format)};
  Stopwatch sw;
  const Graph& g = r.input->graph.graph;
  bool p7_free = !find_induced_path(g, 7);
  auto sides = bipartition(g);
  verify_enumeration(g, r.invariants);
  verify_solvers(g, o.k, r.invariants);
  if (p7_free) {
    verify_coloring(g, r.invariants);
    if (g.n() <= 40)
      verify_structural(g, r.invariants);
    else
      r.invariants.skip("structural_constructors", "limited to 40 vertices");
  } else {
    r.invariants.skip("path_coloring_bound", "graph has an induced P7");
    r.invariants.skip("structural_constructors", "graph has an induced P7");
  }
  if (sides || r.input->graph.side1)
    verify_bipartite(BipartiteGraph::make(g, r.input->graph.side1), p7_free, r.invariants);
  else
    r.invariants.skip("biclique_criterion", "graph is not bipartite");
  int run = 0, failed = 0;
  for (const auto& [name, e] : r.invariants.entries.items()) {
    run += e["status"] != "skipped";
    failed += e["status"] == "fail";
  }
  r.result = {{"p7_free", p7_free}, {"checks_run", run}, {"checks_failed", failed}};
  r.wall_ms = sw.ms();
  return r;
}

} // namespace pmc::cli
