#include "pmc/oracles.hpp"

#include "pmc/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pmc {

namespace {

void require_cap(const Graph& g, int cap, const char* what) {
  if (g.n() > cap)
    throw CapabilityError(std::string(what) + " is limited to " + std::to_string(cap) + " vertices");
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int u : g.neighbors(v))
      adj[v] |= std::uint32_t{1} << u;
  return adj;
}

VertexSet mask_to_set(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u)
      s.set(v);
  return s;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[a] = b;
    return true;
  }
};

template <class Accept>
SolveResult subset_scan(const Graph& g, Problem p, int k, Accept accept) {
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  SolveResult best{p, k, Weight(0), VertexSet(n), false, {}};
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (!accept(adj, mask))
      continue;
    Weight w(0);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u)
        w += g.weight(v);
    VertexSet s = mask_to_set(n, mask);
    if (w > best.weight || (w == best.weight && lex_preferred(s, best.witness))) {
      best.weight = w;
      best.witness = s;
    }
  }
  return best;
}

void mwis_branch(const Graph& g, const std::vector<std::uint32_t>& adj, std::uint32_t cand,
                 std::uint32_t chosen, Weight cur, Weight& best, std::uint32_t& best_set) {
  if (cand == 0) {
    if (cur > best) {
      best = cur;
      best_set = chosen;
    }
    return;
  }
  Weight rest(0);
  for (std::uint32_t m = cand; m; m &= m - 1)
    rest += g.weight(std::countr_zero(m));
  if (cur + rest <= best)
    return;
  int v = std::countr_zero(cand);
  std::uint32_t bit = std::uint32_t{1} << v;
  mwis_branch(g, adj, cand & ~bit & ~adj[v], chosen | bit, cur + g.weight(v), best, best_set);
  mwis_branch(g, adj, cand & ~bit, chosen, cur, best, best_set);
}

} // namespace

SolveResult oracle_mwis(const Graph& g) {
  require_cap(g, 20, "oracle_mwis");
  const auto adj = adjacency_masks(g);
  Weight best(-1);
  std::uint32_t best_set = 0;
  mwis_branch(g, adj, (std::uint32_t{1} << g.n()) - 1, 0, Weight(0), best, best_set);
  return SolveResult{Problem::Mwis, 0, best, mask_to_set(g.n(), best_set), false, {}};
}

SolveResult oracle_induced_forest(const Graph& g) {
  require_cap(g, 14, "oracle_induced_forest");
  const int n = g.n();
  return subset_scan(g, Problem::InducedForest, 0, [n](const auto& adj, std::uint32_t mask) {
    UnionFind uf(n);
    for (int u = 0; u < n; ++u) {
      if (!(mask >> u & 1u))
        continue;
      std::uint32_t up = adj[u] & mask & ~((std::uint32_t{2} << u) - 1);
      for (; up; up &= up - 1)
        if (!uf.unite(u, std::countr_zero(up)))
          return false;
    }
    return true;
  });
}

SolveResult oracle_max_degree(const Graph& g, int k) {
  require_cap(g, 14, "oracle_max_degree");
  const int n = g.n();
  return subset_scan(g, Problem::MaxDegree, k, [n, k](const auto& adj, std::uint32_t mask) {
    for (int u = 0; u < n; ++u)
      if ((mask >> u & 1u) && std::popcount(adj[u] & mask) > k)
        return false;
    return true;
  });
}

SolveResult oracle_solve(const Graph& g, Problem p, int k) {
  switch (p) {
  case Problem::Mwis:
    return oracle_mwis(g);
  case Problem::InducedForest:
    return oracle_induced_forest(g);
  case Problem::MaxDegree:
    return oracle_max_degree(g, k);
  }
  throw ContractViolation("unknown problem");
}

std::vector<VertexSet> oracle_minseps(const Graph& g) {
  require_cap(g, 14, "oracle_minseps");
  const int n = g.n();
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    VertexSet s = mask_to_set(n, mask);
    VertexSet rest = g.all() - s;
    std::vector<int> reps;
    for (const VertexSet& c : components(g, rest))
      reps.push_back(c.first());
    bool minimal = false;
    // S is a minimal (u,v)-separator for some u, v: no proper subset
    // obtained by dropping one vertex still separates them.
    for (std::size_t i = 0; i < reps.size() && !minimal; ++i)
      for (std::size_t j = i + 1; j < reps.size() && !minimal; ++j) {
        bool all_needed = true;
        for (int x : s) {
          VertexSet opened = rest.with(x);
          if (!component_of(g, opened, reps[i]).test(reps[j])) {
            all_needed = false;
            break;
          }
        }
        minimal = all_needed;
      }
    if (minimal)
      out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool oracle_is_pmc(const Graph& g, const VertexSet& omega) {
  if (omega.empty())
    return false;
  std::vector<VertexSet> nbhds;
  for (const VertexSet& d : components(g, g.all() - omega)) {
    VertexSet nd(g.n());
    for (int v : d)
      for (int u : g.neighbors(v))
        if (omega.test(u))
          nd.set(u);
    if (nd == omega)
      return false;
    nbhds.push_back(nd);
  }
  std::vector<int> om = omega.to_vector();
  for (std::size_t i = 0; i < om.size(); ++i)
    for (std::size_t j = i + 1; j < om.size(); ++j) {
      if (g.adjacent(om[i], om[j]))
        continue;
      bool covered = std::any_of(nbhds.begin(), nbhds.end(),
                                 [&](const VertexSet& nd) { return nd.test(om[i]) && nd.test(om[j]); });
      if (!covered)
        return false;
    }
  return true;
}

std::vector<VertexSet> oracle_pmcs(const Graph& g) {
  require_cap(g, 14, "oracle_pmcs");
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << g.n()); ++mask) {
    VertexSet s = mask_to_set(g.n(), mask);
    if (oracle_is_pmc(g, s))
      out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool oracle_is_chordal(const Graph& g) {
  require_cap(g, 14, "oracle_is_chordal");
  // Repeatedly delete a simplicial vertex.
  VertexSet left = g.all();
  while (left.any()) {
    int simplicial = -1;
    for (int v : left) {
      VertexSet nb = g.neighbors(v) & left;
      bool clique = true;
      for (int u : nb)
        if (!(nb.without(u)).is_subset_of(g.neighbors(u))) {
          clique = false;
          break;
        }
      if (clique) {
        simplicial = v;
        break;
      }
    }
    if (simplicial < 0)
      return false;
    left.reset(simplicial);
  }
  return true;
}

std::vector<std::vector<Edge>> oracle_minimal_triangulations(const Graph& g) {
  require_cap(g, 8, "oracle_minimal_triangulations");
  const int n = g.n();
  // Elimination game over every ordering, states deduplicated on
  // (eliminated set, fill so far).
  std::set<std::vector<Edge>> fills;
  std::set<std::pair<std::uint32_t, std::vector<Edge>>> seen;
  std::vector<std::pair<std::uint32_t, std::vector<Edge>>> stack{{0u, {}}};
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  while (!stack.empty()) {
    auto [done, fill] = stack.back();
    stack.pop_back();
    if (done == all) {
      fills.insert(fill);
      continue;
    }
    Graph cur = g.with_edges(fill);
    for (int v = 0; v < n; ++v) {
      if (done >> v & 1u)
        continue;
      std::vector<Edge> next = fill;
      std::vector<int> nb;
      for (int u : cur.neighbors(v))
        if (!(done >> u & 1u))
          nb.push_back(u);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!cur.adjacent(nb[i], nb[j]))
            next.push_back({std::min(nb[i], nb[j]), std::max(nb[i], nb[j])});
      std::sort(next.begin(), next.end());
      std::pair<std::uint32_t, std::vector<Edge>> state{done | (std::uint32_t{1} << v), next};
      if (seen.insert(state).second)
        stack.push_back(std::move(state));
    }
  }
  std::vector<std::vector<Edge>> out;
  for (const auto& f : fills) {
    bool minimal = true;
    for (std::size_t i = 0; i < f.size() && minimal; ++i) {
      std::vector<Edge> smaller = f;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (oracle_is_chordal(g.with_edges(smaller)))
        minimal = false;
    }
    if (minimal)
      out.push_back(f);
  }
  return out;
}

std::vector<VertexSet> oracle_maximal_cliques(const Graph& g) {
  require_cap(g, 14, "oracle_maximal_cliques");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    bool clique = true;
    for (int v = 0; v < n && clique; ++v)
      if ((mask >> v & 1u) && (mask & ~adj[v] & ~(std::uint32_t{1} << v)))
        clique = false;
    if (!clique)
      continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(mask >> v & 1u) && (adj[v] & mask) == mask)
        maximal = false;
    if (maximal)
      out.push_back(mask_to_set(n, mask));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int oracle_treewidth(const Graph& g) {
  require_cap(g, 14, "oracle_treewidth");
  const int n = g.n();
  if (n == 0)
    return 0;
  // TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v)
  // is the set of vertices outside S u {v} reachable from v through S.
  std::vector<int> tw(std::size_t{1} << n, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    int best = n;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1u))
        continue;
      std::uint32_t inner = s & ~(std::uint32_t{1} << v);
      VertexSet through = mask_to_set(n, inner).with(v);
      VertexSet reach = component_of(g, through, v);
      VertexSet q = neighborhood(g, reach) - mask_to_set(n, inner);
      q.reset(v);
      best = std::min(best, std::max(tw[inner], q.count()));
    }
    tw[s] = best;
  }
  return std::max(0, tw[(std::size_t{1} << n) - 1]);
}

int oracle_clique_number(const Graph& g) {
  require_cap(g, 20, "oracle_clique_number");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  std::vector<char> clique(std::size_t{1} << n, 0);
  clique[0] = 1;
  int best = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    int low = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    clique[s] = clique[rest] && (rest & ~adj[low]) == 0;
    if (clique[s])
      best = std::max(best, std::popcount(s));
  }
  return best;
}

std::optional<std::vector<int>> oracle_induced_path(const Graph& g, int t) {
  require_cap(g, 16, "oracle_induced_path");
  const int n = g.n();
  if (t < 1 || t > n)
    return std::nullopt;
  std::vector<int> pick(t);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    VertexSet s = VertexSet::from(n, pick);
    int edges = 0, ends = -1;
    bool ok = true;
    for (int v : pick) {
      int d = (g.neighbors(v) & s).count();
      if (d > 2 || (t > 1 && d == 0)) {
        ok = false;
        break;
      }
      edges += d;
      if (d <= 1 && ends < 0)
        ends = v;
    }
    if (ok && edges / 2 == t - 1 && is_connected(g, s)) {
      std::vector<int> order{ends};
      int prev = -1;
      while (static_cast<int>(order.size()) < t) {
        for (int w : g.neighbors(order.back()) & s)
          if (w != prev) {
            prev = order.back();
            order.push_back(w);
            break;
          }
      }
      return order;
    }
    int i = t - 1;
    while (i >= 0 && pick[i] == n - t + i)
      --i;
    if (i < 0)
      return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < t; ++j)
      pick[j] = pick[j - 1] + 1;
  }
}

// ---------------------------------------------------------------- fixtures

std::optional<FixtureKind> parse_fixture_kind(const std::string& name) {
  if (name == "random")
    return FixtureKind::Random;
  if (name == "chordal_bipartite")
    return FixtureKind::ChordalBipartite;
  if (name == "p7free_bipartite")
    return FixtureKind::P7FreeBipartite;
  if (name == "p7free_bounded_omega")
    return FixtureKind::P7FreeBoundedOmega;
  return std::nullopt;
}

std::string fixture_kind_name(FixtureKind k) {
  switch (k) {
  case FixtureKind::Random:
    return "random";
  case FixtureKind::ChordalBipartite:
    return "chordal_bipartite";
  case FixtureKind::P7FreeBipartite:
    return "p7free_bipartite";
  case FixtureKind::P7FreeBoundedOmega:
    return "p7free_bounded_omega";
  }
  return "?";
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        es.push_back({u, v});
  return Graph(n, es);
}

std::vector<Weight> random_weights(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 3);
  std::vector<Weight> w;
  for (int i = 0; i < n; ++i) {
    int a = num(rng);
    int b = den(rng);
    w.emplace_back(a, b);
  }
  return w;
}

namespace {

// Growing edge list with per-vertex side labels.
struct Builder {
  int n = 0;
  std::vector<int> side;
  std::vector<std::set<int>> adj;

  int add(int s, const std::vector<int>& nb) {
    int v = n++;
    side.push_back(s);
    adj.emplace_back(nb.begin(), nb.end());
    for (int u : nb)
      adj[u].insert(v);
    return v;
  }
  void pop() {
    int v = --n;
    for (int u : adj[v])
      adj[u].erase(v);
    adj.pop_back();
    side.pop_back();
  }
  Graph graph() const {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v)
          es.push_back({u, v});
    return Graph(n, es);
  }
  std::vector<int> on_side(int s) const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if (side[v] == s)
        out.push_back(v);
    return out;
  }
  VertexSet side1() const {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (side[v] == 0)
        s.set(v);
    return s;
  }
};

template <class T>
const T& pick_one(const std::vector<T>& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

Builder six_cycle() {
  Builder b;
  b.add(0, {});
  for (int i = 1; i < 6; ++i)
    b.add(i % 2, {i - 1});
  b.adj[0].insert(5);
  b.adj[5].insert(0);
  return b;
}

Fixture chordal_bipartite_fixture(int n, std::mt19937_64& rng) {
  Builder b;
  b.add(0, {});
  if (n >= 2)
    b.add(1, {0});
  std::uniform_int_distribution<int> len(1, 4);
  while (b.n < n) {
    int s = std::bernoulli_distribution(0.5)(rng) ? 0 : 1;
    std::vector<int> other = b.on_side(1 - s);
    std::shuffle(other.begin(), other.end(), rng);
    // Neighbours whose neighbourhoods form an inclusion chain keep every
    // long cycle away from the new vertex.
    std::vector<int> chosen;
    int want = len(rng);
    for (int u : other) {
      if (static_cast<int>(chosen.size()) >= want)
        break;
      bool comparable = std::all_of(chosen.begin(), chosen.end(), [&](int w) {
        return std::includes(b.adj[u].begin(), b.adj[u].end(), b.adj[w].begin(), b.adj[w].end()) ||
               std::includes(b.adj[w].begin(), b.adj[w].end(), b.adj[u].begin(), b.adj[u].end());
      });
      if (comparable)
        chosen.push_back(u);
    }
    b.add(s, chosen);
  }
  return Fixture{b.graph(), b.side1(), {}, 0};
}

bool p7_through_last(const Builder& b) {
  Graph g = b.graph();
  return find_induced_path_through(g, b.n - 1, 7).has_value();
}

Fixture p7free_bipartite_fixture(int n, std::mt19937_64& rng) {
  Builder b = n >= 6 ? six_cycle() : Builder{};
  if (b.n == 0)
    b.add(0, {});
  int rejections = 0;
  std::uniform_int_distribution<int> op(0, 9);
  while (b.n < n) {
    int choice = op(rng);
    if (choice < 4) {
      int v = std::uniform_int_distribution<int>(0, b.n - 1)(rng);
      std::vector<int> nb(b.adj[v].begin(), b.adj[v].end());
      b.add(b.side[v], nb);
    } else if (choice < 5) {
      int s = std::bernoulli_distribution(0.5)(rng) ? 0 : 1;
      b.add(s, b.on_side(1 - s));
    } else {
      int s = std::bernoulli_distribution(0.5)(rng) ? 0 : 1;
      std::vector<int> other = b.on_side(1 - s);
      std::vector<int> nb;
      std::bernoulli_distribution coin(0.35);
      for (int u : other)
        if (coin(rng))
          nb.push_back(u);
      if (nb.empty() && !other.empty())
        nb.push_back(pick_one(other, rng));
      b.add(s, nb);
      if (p7_through_last(b)) {
        b.pop();
        if (++rejections > 200 * n)
          throw GenerationError("p7free_bipartite: rejection budget exhausted after " +
                                std::to_string(rejections) + " rejections at n=" + std::to_string(b.n));
      }
    }
  }
  return Fixture{b.graph(), b.side1(), {}, 0};
}

Fixture p7free_bounded_omega_fixture(int n, int k, std::mt19937_64& rng) {
  if (k == 1)
    return Fixture{Graph(n), std::nullopt, {}, 0};
  Builder b = n >= 6 ? six_cycle() : Builder{};
  if (b.n == 0)
    b.add(0, {});
  int rejections = 0;
  std::uniform_int_distribution<int> op(0, 9);
  while (b.n < n) {
    int choice = op(rng);
    std::vector<int> nb;
    if (choice < 3) {
      int v = std::uniform_int_distribution<int>(0, b.n - 1)(rng);
      nb.assign(b.adj[v].begin(), b.adj[v].end());
    } else {
      std::bernoulli_distribution coin(0.3);
      for (int u = 0; u < b.n; ++u)
        if (coin(rng))
          nb.push_back(u);
      if (nb.empty())
        nb.push_back(std::uniform_int_distribution<int>(0, b.n - 1)(rng));
    }
    b.add(0, nb);
    Graph g = b.graph();
    VertexSet closed = g.neighbors(b.n - 1).with(b.n - 1);
    bool ok = closed.count() <= 64 ? clique_number(g, closed) <= k : clique_number(g) <= k;
    if (ok && find_induced_path_through(g, b.n - 1, 7))
      ok = false;
    if (!ok) {
      b.pop();
      if (++rejections > 200 * n)
        throw GenerationError("p7free_bounded_omega: rejection budget exhausted after " +
                              std::to_string(rejections) + " rejections at n=" + std::to_string(b.n));
    }
  }
  return Fixture{b.graph(), std::nullopt, {}, 0};
}

} // namespace

Fixture gen_fixture(FixtureKind kind, int n, std::uint64_t seed, int k) {
  if (n < 1 || n > VertexSet::kMaxVertices)
    throw DomainError("fixture size must be within 1..512");
  std::mt19937_64 rng(seed);
  Fixture f;
  switch (kind) {
  case FixtureKind::Random:
    f = Fixture{random_graph(n, 0.35, rng), std::nullopt, {"random"}, seed};
    break;
  case FixtureKind::ChordalBipartite:
    f = chordal_bipartite_fixture(n, rng);
    if (!is_chordal_bipartite(f.graph, *f.side1, f.graph.all() - *f.side1) || !is_connected(f.graph, f.graph.all()))
      throw InvariantViolation("chordal_bipartite fixture failed recognition");
    f.tags = {"bipartite", "chordal_bipartite", "connected"};
    break;
  case FixtureKind::P7FreeBipartite:
    f = p7free_bipartite_fixture(n, rng);
    if (!is_independent(f.graph, *f.side1) || !is_independent(f.graph, f.graph.all() - *f.side1) ||
        find_induced_path(f.graph, 7))
      throw InvariantViolation("p7free_bipartite fixture failed recognition");
    f.tags = {"bipartite", "p7_free"};
    break;
  case FixtureKind::P7FreeBoundedOmega:
    if (k < 1)
      throw DomainError("clique bound must be positive");
    f = p7free_bounded_omega_fixture(n, k, rng);
    if ((n <= 64 && clique_number(f.graph) > k) || find_induced_path(f.graph, 7))
      throw InvariantViolation("p7free_bounded_omega fixture failed recognition");
    f.tags = {"p7_free", "omega<=" + std::to_string(k)};
    break;
  }
  f.seed = seed;
  return f;
}

} // namespace pmc
