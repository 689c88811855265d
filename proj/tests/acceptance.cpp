// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: pmc_acceptance [criterion-number ...]

#include "pmc/bipartite.hpp"
#include "pmc/coloring.hpp"
#include "pmc/dp.hpp"
#include "pmc/oracles.hpp"
#include "pmc/recognition.hpp"
#include "pmc/separators.hpp"
#include "pmc/structural.hpp"
#include "pmc/treedepth.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace pmc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

std::string edges_inline(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " E=";
  for (Edge e : g.edges())
    os << e.u << '-' << e.v << ' ';
  return os.str();
}

VertexSet set_from(int n, const std::vector<int>& vs) {
  VertexSet s(n);
  for (int v : vs)
    s.set(v);
  return s;
}

// ------------------------------------------------------------------ 1

Outcome solvers_vs_oracles() {
  int graphs = 0, mismatches = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng(seed * 7919 + 1);
    int n = 1 + static_cast<int>(seed % 14);
    double p = 0.15 + 0.1 * static_cast<double>(seed % 6);
    Graph g = random_graph(n, p, rng);
    g = g.with_weights(random_weights(n, rng));
    BagFamily fam = pmc_family(g);
    int k = static_cast<int>(seed % 3);
    std::pair<SolveResult, SolveResult> runs[] = {
        {solve_mwis(g, fam), oracle_mwis(g)},
        {solve_induced_forest(g, fam), oracle_induced_forest(g)},
        {solve_max_degree(g, fam, k), oracle_max_degree(g, k)},
    };
    for (auto& [got, want] : runs)
      if (got.weight != want.weight || got.conditional || !is_feasible(g, got.problem, got.k, got.witness)) {
        if (first.empty())
          first = fmt(" first: seed %llu %s", static_cast<unsigned long long>(seed),
                      std::string(problem_name(got.problem)).c_str());
        ++mismatches;
      }
    ++graphs;
  }
  return {mismatches == 0, fmt("%d graphs, %d solves, %d mismatches", graphs, 3 * graphs, mismatches) + first};
}

// ------------------------------------------------------------------ 2

Outcome enumeration_vs_oracles() {
  int graphs = 0, sep_bad = 0, pmc_bad = 0, bound_bad = 0;
  long long max_a = 0, max_b = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng(seed * 104729 + 3);
    int n = 1 + static_cast<int>(seed % 12);
    double p = 0.1 + 0.1 * static_cast<double>(seed % 7);
    Graph g = random_graph(n, p, rng);
    auto seps = sorted(minimal_separator_sets(g));
    auto pmcs = sorted(pmc_sets(g));
    sep_bad += seps != sorted(oracle_minseps(g));
    pmc_bad += pmcs != sorted(oracle_pmcs(g));
    long long a = static_cast<long long>(seps.size()), b = static_cast<long long>(pmcs.size());
    if (b > n * (a * a + a + 1) || a > n * b)
      ++bound_bad;
    max_a = std::max(max_a, a);
    max_b = std::max(max_b, b);
    ++graphs;
  }
  return {sep_bad + pmc_bad + bound_bad == 0,
          fmt("%d graphs, separator mismatches %d, PMC mismatches %d, bound violations %d (max a=%lld b=%lld)",
              graphs, sep_bad, pmc_bad, bound_bad, max_a, max_b)};
}

// ------------------------------------------------------------------ 3

Outcome completion_invariants() {
  int fixtures = 0, violations = 0, steps = 0, nontrivial = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 8 + static_cast<int>(seed % 33);
    Fixture f = gen_fixture(FixtureKind::P7FreeBipartite, n, seed + 5000);
    BipartiteGraph bg = BipartiteGraph::make(f.graph, f.side1);
    try {
      CompletionResult r = complete_to_chordal_bipartite(bg, true);
      if (!is_chordal_bipartite(r.graph.g, r.graph.side1, r.graph.side2) || !is_pt_free(r.graph.g, 7))
        throw InvariantViolation("final graph is not a P7-free chordal bipartite graph");
      steps += static_cast<int>(r.trace.size());
      nontrivial += !r.trace.empty();
    } catch (const std::exception& e) {
      if (first.empty())
        first = fmt(" first: n=%d seed %llu: %s", n, static_cast<unsigned long long>(seed + 5000), e.what());
      ++violations;
    }
    ++fixtures;
  }
  bool pass = violations == 0 && nontrivial > 0;
  return {pass, fmt("%d fixtures (%d needed completion, %d steps), %d violations", fixtures, nontrivial, steps,
                    violations) + first};
}

// ------------------------------------------------- bipartite graph census

// Connected bipartite graphs on n vertices up to isomorphism. Side 1 is
// 0..a-1 with a <= n - a; a graph is stored as the sorted list of side-2
// neighbourhood masks, minimised over permutations of side 1 (and over
// swapping the sides when a == n - a).
struct Census {
  std::vector<Graph> graphs;
  std::vector<VertexSet> side1;
};

using Columns = std::vector<unsigned>;

Columns canonical_columns(int a, const Columns& cols) {
  std::vector<int> perm(a);
  std::iota(perm.begin(), perm.end(), 0);
  Columns best;
  do {
    Columns mapped;
    for (unsigned c : cols) {
      unsigned m = 0;
      for (int i = 0; i < a; ++i)
        if (c >> i & 1)
          m |= 1u << perm[i];
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best)
      best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Columns transpose(int a, const Columns& cols) {
  Columns out(a, 0);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < a; ++i)
      if (cols[j] >> i & 1)
        out[i] |= 1u << j;
  return out;
}

Graph from_columns(int a, const Columns& cols) {
  std::vector<Edge> es;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < a; ++i)
      if (cols[j] >> i & 1)
        es.push_back({i, a + static_cast<int>(j)});
  return Graph(a + static_cast<int>(cols.size()), es);
}

Census connected_bipartite_census(int n) {
  Census out;
  if (n == 1) {
    out.graphs.push_back(Graph(1));
    out.side1.push_back(set_from(1, {0}));
    return out;
  }
  for (int a = 1; 2 * a <= n; ++a) {
    int b = n - a;
    unsigned full = (1u << a) - 1;
    std::set<Columns> seen;
    Columns cols(b);
    std::function<void(int, unsigned)> rec = [&](int j, unsigned lo) {
      if (j == b) {
        unsigned cover = 0;
        for (unsigned c : cols)
          cover |= c;
        if (cover != full)
          return;
        Graph g = from_columns(a, cols);
        if (!is_connected(g, g.all()))
          return;
        Columns key = canonical_columns(a, cols);
        if (a == b)
          key = std::min(key, canonical_columns(a, transpose(a, cols)));
        if (seen.insert(key).second) {
          out.graphs.push_back(std::move(g));
          std::vector<int> s1(a);
          std::iota(s1.begin(), s1.end(), 0);
          out.side1.push_back(set_from(n, s1));
        }
        return;
      }
      for (unsigned c = lo; c <= full; ++c) {
        cols[j] = c;
        rec(j + 1, c);
      }
    };
    rec(0, 1);
  }
  return out;
}

// Opposite vertex pairs of every induced C6.
std::vector<std::pair<int, int>> opposite_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const InducedCycle& c : enumerate_induced_c6(g))
    for (int i = 0; i < 3; ++i)
      out.push_back({c.vertices[i], c.vertices[i + 3]});
  return out;
}

bool has_bad_pair(const std::vector<std::pair<int, int>>& pairs, const TreedepthStructure& t) {
  for (auto [a, b] : pairs)
    if (t.contains(a) && t.contains(b) && !t.comparable(a, b))
      return true;
  return false;
}

// ------------------------------------------------------------------ 4

struct CompletionTarget {
  Graph before;
  Graph after;
  std::vector<std::pair<int, int>> before_pairs;
  std::vector<std::pair<int, int>> after_pairs;
};

Outcome structures_survive_completion() {
  int graphs = 0, p7_skipped = 0, swept = 0, violations = 0;
  long long structures = 0, exercised = 0;
  std::string first;
  // Connected bipartite graphs up to isomorphism, n = 1..8.
  const std::size_t known[] = {1, 1, 1, 3, 5, 17, 44, 182};
  bool census_ok = true;
  for (int n = 1; n <= 8; ++n) {
    Census census = connected_bipartite_census(n);
    census_ok = census_ok && census.graphs.size() == known[n - 1];
    for (std::size_t gi = 0; gi < census.graphs.size(); ++gi) {
      const Graph& g = census.graphs[gi];
      ++graphs;
      if (!is_pt_free(g, 7)) {
        ++p7_skipped;
        continue;
      }
      BipartiteGraph bg = BipartiteGraph::make(g, census.side1[gi]);
      // One step per minimal separator of g, plus every step of the loop.
      std::vector<CompletionTarget> targets;
      auto pairs_g = opposite_pairs(g);
      for (const VertexSet& s : minimal_separator_sets(g)) {
        auto fill = biclique_fill(bg, s);
        if (fill.empty())
          continue;
        Graph after = g.with_edges(fill);
        targets.push_back({g, after, pairs_g, opposite_pairs(after)});
      }
      CompletionResult loop = complete_to_chordal_bipartite(bg);
      Graph cur = g;
      for (const CompletionStep& st : loop.trace) {
        Graph next = cur.with_edges(st.added);
        targets.push_back({cur, next, opposite_pairs(cur), opposite_pairs(next)});
        cur = next;
      }
      if (targets.empty())
        continue;
      ++swept;
      for_each_treedepth_structure(g, 3, [&](const TreedepthStructure& t) {
        ++structures;
        for (const CompletionTarget& tg : targets) {
          if (!is_treedepth_structure(tg.before, t) || has_bad_pair(tg.before_pairs, t))
            continue;
          ++exercised;
          if (!is_treedepth_structure(tg.after, t) || has_bad_pair(tg.after_pairs, t)) {
            if (first.empty())
              first = " first: " + edges_inline(g);
            ++violations;
          }
        }
        return true;
      });
    }
  }
  bool pass = violations == 0 && exercised > 0 && census_ok;
  return {pass, fmt("%d graphs up to isomorphism%s (%d with an induced P7 skipped, %d with fill), %lld structures, "
                    "%lld completion checks, %d violations",
                    graphs, census_ok ? "" : " [census count mismatch]", p7_skipped, swept, structures, exercised,
                    violations) + first};
}

// ------------------------------------------------------------------ 5

Outcome gyarfas_bound() {
  int fixtures = 0, violations = 0, max_colors = 0;
  std::string first;
  const FixtureKind kinds[] = {FixtureKind::P7FreeBipartite, FixtureKind::P7FreeBoundedOmega,
                               FixtureKind::P7FreeBoundedOmega};
  for (int ki = 0; ki < 3; ++ki)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      int n = 5 + static_cast<int>(seed % 36);
      Fixture f = gen_fixture(kinds[ki], n, seed + 9000, ki + 1);
      int omega = clique_number(f.graph);
      long long bound = 1;
      for (int i = 1; i < omega; ++i)
        bound *= 6;
      try {
        Coloring c = gyarfas_coloring(f.graph, 7);
        max_colors = std::max(max_colors, c.num_colors);
        if (!is_proper(f.graph, c) || c.num_colors > bound)
          throw InvariantViolation(fmt("%d colours against bound %lld", c.num_colors, bound));
      } catch (const std::exception& e) {
        if (first.empty())
          first = fmt(" first: %s n=%d: %s", fixture_kind_name(kinds[ki]).c_str(), n, e.what());
        ++violations;
      }
      ++fixtures;
    }
  return {violations == 0,
          fmt("%d P7-free fixtures, max colours %d, %d violations", fixtures, max_colors, violations) + first};
}

// ------------------------------------------------------------------ 6

VertexSet random_independent(const Graph& g, const VertexSet& within, std::mt19937_64& rng) {
  std::vector<int> order = within.to_vector();
  std::shuffle(order.begin(), order.end(), rng);
  VertexSet out(g.n());
  for (int v : order)
    if (!g.neighbors(v).intersects(out))
      out.set(v);
  return out;
}

// Dominance orders of m random points: every pair is comparable in one.
TwoOrders plane_orders(int m, std::mt19937_64& rng) {
  std::vector<int> xs(m), ys(m);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::shuffle(ys.begin(), ys.end(), rng);
  TwoOrders t{std::vector(m, std::vector<bool>(m)), std::vector(m, std::vector<bool>(m))};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      t.leq1[a][b] = xs[a] <= xs[b] && ys[a] <= ys[b];
      t.leq2[a][b] = xs[a] <= xs[b] && ys[a] >= ys[b];
    }
  return t;
}

bool below_all(const TwoOrders& t, int v) {
  for (int x = 0; x < t.size(); ++x)
    if (!t.leq1[v][x] && !t.leq2[v][x])
      return false;
  return true;
}

Outcome structural_postconditions() {
  int fixtures = 0, separators = 0, calls = 0, violations = 0, covers_with_qi = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (first.empty())
      first = " first: " + what;
    ++violations;
  };
  const FixtureKind kinds[] = {FixtureKind::P7FreeBoundedOmega, FixtureKind::P7FreeBoundedOmega,
                               FixtureKind::P7FreeBipartite};
  for (int ki = 0; ki < 3; ++ki)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      int n = 8 + static_cast<int>(seed % 9);
      Fixture f = gen_fixture(kinds[ki], n, seed + 12000, ki == 0 ? 2 : 3);
      const Graph& g = f.graph;
      std::mt19937_64 rng(seed);
      int omega = clique_number(g);
      ++fixtures;
      for (const MinimalSeparator& sep : enumerate_minimal_separators(g)) {
        const VertexSet& s = sep.vertices;
        ++separators;
        TwoOrders orders = plane_orders(s.count() + 1, rng);
        int m = two_orders_min(orders);
        ++calls;
        if (!below_all(orders, m))
          fail("two_orders_min result is not below every element");
        for (int u = 0; u < m; ++u)
          if (below_all(orders, u))
            fail("two_orders_min result is not the least candidate");
        for (std::size_t ai = 0; ai < sep.full_components.size(); ++ai)
          for (std::size_t bi = 0; bi < sep.full_components.size(); ++bi) {
            if (ai == bi)
              continue;
            const VertexSet& a = sep.full_components[ai];
            const VertexSet& b = sep.full_components[bi];
            try {
              VertexSet z = find_cograph_dominator(g, s, a, b);
              ++calls;
              if (z.empty() || !z.is_subset_of(a) || !is_connected(g, z) || !is_cograph(g, z) ||
                  !is_complete_to(g, s - neighborhood(g, z), b))
                fail("cograph dominator postcondition, " + edges_inline(g));
              VertexSet x = find_x_set(g, s, a);
              ++calls;
              if (!x.is_subset_of(a) || x.count() > omega)
                fail("x set size or placement");
              for (int v : s - neighborhood(g, x))
                if (!find_induced_path_from(g, v, a, 4))
                  fail("x set leaves a vertex without a path into the component");
              long long cap = factorial(clique_number(g, z) + 1);
              for (int rep = 0; rep < 3; ++rep) {
                VertexSet i_set = random_independent(g, b, rng);
                VertexSet j_set = random_independent(g, neighborhood(g, z) & neighborhood(g, i_set), rng);
                NeighborhoodCover c = cograph_neighborhood_cover(g, z, i_set, j_set);
                ++calls;
                covers_with_qi += c.q_i.any();
                if (!c.q_z.is_subset_of(z) || !c.q_i.is_subset_of(i_set) || c.q_z.count() > cap ||
                    c.q_i.count() > cap || !j_set.is_subset_of(neighborhood(g, c.q_z) | neighborhood(g, c.q_i)))
                  fail("neighbourhood cover postcondition");
              }
            } catch (const std::exception& e) {
              fail(e.what());
            }
          }
      }
    }
  return {violations == 0 && covers_with_qi > 0,
          fmt("%d fixtures, %d separators, %d calls (%d covers used Q_I), %d violations", fixtures, separators,
              calls, covers_with_qi, violations) + first};
}

// ------------------------------------------------------------------ 7

struct C6Data {
  InducedCycle cycle;
  VertexSet triple[2]; // vertices seeing exactly c_p, c_{p+2}, c_{p+4}
};

VertexSet sees_exactly(const Graph& g, const VertexSet& cyc, const VertexSet& target) {
  VertexSet out(g.n());
  for (int v : g.all() - cyc)
    if ((g.neighbors(v) & cyc) == target)
      out.set(v);
  return out;
}

struct SweepCounts {
  long long cycles = 0, remainder_checks = 0, comparable_checks = 0, structures = 0, bad_c6 = 0, maximal = 0;
  int violations = 0;
  std::string first;
  void fail(const std::string& what) {
    if (first.empty())
      first = " first: " + what;
    ++violations;
  }
};

// Components of g - N[z] with at least two vertices: their neighbourhoods
// inside each side are nested.
void check_nesting(const Graph& g, const VertexSet& side1, const VertexSet& z, SweepCounts& sc) {
  VertexSet rest = g.all() - neighborhood(g, z, true);
  std::vector<VertexSet> big;
  for (VertexSet& d : components(g, rest))
    if (d.count() >= 2)
      big.push_back(std::move(d));
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j)
      for (const VertexSet& side : {side1, g.all() - side1}) {
        VertexSet a = neighborhood(g, big[i]) & side, b = neighborhood(g, big[j]) & side;
        ++sc.comparable_checks;
        if (!a.is_subset_of(b) && !b.is_subset_of(a))
          sc.fail("remainder neighbourhoods not nested, " + edges_inline(g));
      }
}

void sweep_graph(const Graph& g, const VertexSet& side1, SweepCounts& sc, bool structures) {
  BipartiteGraph bg = BipartiteGraph::make(g, side1);
  std::vector<C6Data> cycles;
  for (const InducedCycle& c : enumerate_induced_c6(g)) {
    ++sc.cycles;
    VertexSet cyc = set_from(g.n(), c.vertices);
    C6Data cd{c, {}};
    for (int p = 0; p < 2; ++p)
      cd.triple[p] = sees_exactly(g, cyc, set_from(g.n(), {c.vertices[p], c.vertices[p + 2], c.vertices[p + 4]}));
    VertexSet rest = g.all() - neighborhood(g, cyc, true);
    VertexSet mr(g.n());
    for (const VertexSet& d : components(g, rest))
      if (d.count() >= 2)
        mr |= d;
    for (int v : neighborhood(g, mr)) {
      ++sc.remainder_checks;
      if (!cd.triple[0].test(v) && !cd.triple[1].test(v))
        sc.fail("remainder neighbour outside both triples, " + edges_inline(g));
    }
    C6Context ctx = c6_context(g, c);
    if (ctx.s1 != cd.triple[0] || ctx.s2 != cd.triple[1] || ctx.main_remainder != mr)
      sc.fail("c6_context disagrees with the direct computation");
    check_nesting(g, side1, cyc, sc);
    cycles.push_back(std::move(cd));
  }
  for (int v = 0; v < g.n(); ++v) {
    check_nesting(g, side1, set_from(g.n(), {v}), sc);
    for (int u : g.neighbors(v))
      if (u > v)
        check_nesting(g, side1, set_from(g.n(), {u, v}), sc);
  }
  if (cycles.empty() || !structures)
    return;

  struct Bad {
    int dx, dy;
    bool rich_x, rich_y;
  };
  std::vector<Bad> bad;
  for_each_treedepth_structure(g, 3, [&](const TreedepthStructure& t) {
    ++sc.structures;
    bad.clear();
    for (const C6Data& cd : cycles)
      for (int i = 0; i < 3; ++i) {
        int a = cd.cycle.vertices[i], b = cd.cycle.vertices[i + 3];
        if (!t.contains(a) || !t.contains(b) || t.comparable(a, b))
          continue;
        int ix = side1.test(a) ? i : i + 3;
        int x = cd.cycle.vertices[ix], y = cd.cycle.vertices[(ix + 3) % 6];
        const VertexSet& sx = cd.triple[ix % 2];
        const VertexSet& sy = cd.triple[(ix + 1) % 2];
        for (int alpha = 1; alpha <= t.d; ++alpha) {
          VertexSet lvl = t.level(alpha);
          if ((sx & lvl).count() >= 2 && alpha <= t.depth[x])
            sc.fail("rich level of the x side not below x");
          if ((sy & lvl).count() >= 2 && alpha <= t.depth[y])
            sc.fail("rich level of the y side not below y");
        }
        bad.push_back({t.depth[x], t.depth[y], is_t_rich(sx, t), is_t_rich(sy, t)});
      }
    if (bad.empty())
      return true;
    sc.bad_c6 += static_cast<long long>(bad.size());
    auto top = std::max_element(bad.begin(), bad.end(), [](const Bad& p, const Bad& q) {
      return depth_order_less({p.dx, p.dy}, {q.dx, q.dy});
    });
    for (const Bad& b : bad) {
      if (b.rich_x && b.rich_y) {
        bool deeper = std::any_of(bad.begin(), bad.end(),
                                  [&](const Bad& o) { return o.dx > b.dy && o.dy > b.dx; });
        if (!deeper)
          sc.fail("rich/rich bad C6 without a deeper swapped bad C6, " + edges_inline(g));
      }
      if (b.dx == top->dx && b.dy == top->dy) {
        ++sc.maximal;
        if (b.rich_x && b.rich_y)
          sc.fail("maximal bad C6 with two rich sides, " + edges_inline(g));
      }
    }
    return true;
  });
}

Outcome bad_c6_sweep() {
  SweepCounts sc;
  int graphs = 0;
  for (int n = 6; n <= 10; ++n) {
    Census census = connected_bipartite_census(n);
    for (std::size_t gi = 0; gi < census.graphs.size(); ++gi)
      if (is_pt_free(census.graphs[gi], 7)) {
        sweep_graph(census.graphs[gi], census.side1[gi], sc, true);
        ++graphs;
      }
  }
  // Structure-free parts on larger fixtures.
  int larger = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Fixture f = gen_fixture(FixtureKind::P7FreeBipartite, 12 + static_cast<int>(seed % 29), seed + 15000);
    sweep_graph(f.graph, *f.side1, sc, false);
    ++larger;
  }
  bool pass = sc.violations == 0 && sc.maximal > 0 && sc.remainder_checks > 0;
  return {pass, fmt("%d P7-free graphs n<=10 up to isomorphism (all structures, d=3) + %d fixtures n<=40; %lld C6s, "
                    "%lld remainder neighbours, %lld nesting pairs, %lld structures, %lld bad C6s (%lld maximal), "
                    "%d violations",
                    graphs, larger, sc.cycles, sc.remainder_checks, sc.comparable_checks, sc.structures, sc.bad_c6,
                    sc.maximal, sc.violations) + sc.first};
}

// ------------------------------------------------------------------ 8

Outcome kloks_trend() {
  std::vector<double> means;
  std::string detail;
  bool classes_ok = true;
  for (int n : {20, 40, 80, 160}) {
    double sum = 0;
    const int reps = 10;
    for (int r = 0; r < reps; ++r) {
      Fixture f = gen_fixture(FixtureKind::ChordalBipartite, n, 20000 + 97 * n + r);
      classes_ok = classes_ok && is_chordal_bipartite(f.graph);
      double count = static_cast<double>(minimal_separator_sets(f.graph).size());
      sum += count / (f.graph.n() + f.graph.edge_count());
    }
    means.push_back(sum / reps);
    detail += fmt("n=%d:%.3f ", n, means.back());
  }
  double ratio = *std::max_element(means.begin(), means.end()) / *std::min_element(means.begin(), means.end());
  return {classes_ok && ratio <= 4.0, detail + fmt("ratio %.2f (limit 4)", ratio)};
}

// ------------------------------------------------------------------ 9

Outcome completed_pipeline() {
  int fixtures = 0, mismatches = 0, completed = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 4 + static_cast<int>(seed % 15);
    Fixture f = gen_fixture(FixtureKind::P7FreeBipartite, n, seed + 30000);
    std::mt19937_64 rng(seed);
    Graph g = f.graph.with_weights(random_weights(n, rng));
    CompletedSolve cs = solve_on_completed(BipartiteGraph::make(g, f.side1), Problem::Mwis);
    SolveResult want = oracle_mwis(g);
    completed += !cs.completion.trace.empty();
    if (cs.result.weight != want.weight || cs.result.conditional || !is_independent(g, cs.result.witness)) {
      if (first.empty())
        first = fmt(" first: seed %llu got %s want %s", static_cast<unsigned long long>(seed + 30000),
                    to_string(cs.result.weight).c_str(), to_string(want.weight).c_str());
      ++mismatches;
    }
    ++fixtures;
  }
  return {mismatches == 0 && completed > 0,
          fmt("%d fixtures (%d needed completion), %d mismatches", fixtures, completed, mismatches) + first};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "solver oracle equivalence", solvers_vs_oracles},
    {2, "enumeration oracle equivalence and count bounds", enumeration_vs_oracles},
    {3, "completion loop invariants", completion_invariants},
    {4, "structures survive completion", structures_survive_completion},
    {5, "path-colouring bound", gyarfas_bound},
    {6, "structural constructor postconditions", structural_postconditions},
    {7, "bad C6 invariant sweep", bad_c6_sweep},
    {8, "chordal bipartite separator trend", kloks_trend},
    {9, "completed bipartite MWIS pipeline", completed_pipeline},
};

} // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i)
    only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (!only.empty() && !only.count(c.id))
      continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("uncaught: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
