#include "pmc/separators.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace pmc {

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (VertexSet& c : components(g, g.all() - s))
    if (neighborhood(g, c) == s)
      out.push_back(std::move(c));
  return out;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
  if (s.width() != g.n())
    throw ContractViolation("vertex set width does not match graph order");
  int full = 0;
  for (const VertexSet& c : components(g, g.all() - s))
    if (neighborhood(g, c) == s && ++full >= 2)
      return true;
  return false;
}

MinimalSeparator make_separator(const Graph& g, const VertexSet& s) {
  MinimalSeparator out{s, full_components(g, s)};
  if (out.full_components.size() < 2)
    throw DomainError("set is not a minimal separator");
  return out;
}

namespace {

void sort_canonical(std::vector<VertexSet>& v) { std::sort(v.begin(), v.end(), canonical_less); }

// Closure under S -> N(C) for C a component of g - (S u N(x)), x in S,
// seeded with N(C) for C a component of g - N[v].
std::vector<VertexSet> separator_closure(const Graph& g) {
  std::unordered_set<VertexSet> seen;
  std::deque<VertexSet> queue;
  auto offer = [&](const VertexSet& s) {
    if (seen.insert(s).second)
      queue.push_back(s);
  };
  for (int v = 0; v < g.n(); ++v) {
    VertexSet closed = g.neighbors(v).with(v);
    for (const VertexSet& c : components(g, g.all() - closed))
      offer(neighborhood(g, c));
  }
  while (!queue.empty()) {
    VertexSet s = queue.front();
    queue.pop_front();
    for (int x : s) {
      VertexSet removed = s | g.neighbors(x);
      for (const VertexSet& c : components(g, g.all() - removed))
        offer(neighborhood(g, c));
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

// All PMCs of a connected graph, built one vertex at a time along a BFS
// order so every prefix graph stays connected.
std::vector<VertexSet> pmcs_connected(const Graph& g) {
  const int n = g.n();
  std::vector<int> order{0};
  {
    VertexSet seen(n);
    seen.set(0);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int w : g.neighbors(order[i]) - seen) {
        seen.set(w);
        order.push_back(w);
      }
  }
  // Work in relabelled coordinates: prefix i is vertices 0..i-1.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i)
    pos[order[i]] = i;
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    es.push_back({pos[e.u], pos[e.v]});
  Graph h(n, es);

  auto prefix_graph = [&](int k) {
    VertexSet s(n);
    for (int i = 0; i < k; ++i)
      s.set(i);
    return h.induced(s);
  };
  std::vector<VertexSet> prev_pmcs{VertexSet(1, {0})};
  std::vector<VertexSet> prev_seps;
  for (int k = 2; k <= n; ++k) {
    Graph cur = prefix_graph(k);
    const int a = k - 1;
    std::vector<VertexSet> seps = separator_closure(cur);
    std::unordered_set<VertexSet> prev_sep_set;
    for (const VertexSet& s : prev_seps) {
      VertexSet t(k);
      for (int v : s)
        t.set(v);
      prev_sep_set.insert(t);
    }
    std::unordered_set<VertexSet> found;
    auto lift = [&](const VertexSet& s) {
      VertexSet t(k);
      for (int v : s)
        t.set(v);
      return t;
    };
    for (const VertexSet& p : prev_pmcs) {
      VertexSet lifted = lift(p);
      if (is_pmc(cur, lifted.with(a)))
        found.insert(lifted.with(a));
      else if (is_pmc(cur, lifted))
        found.insert(lifted);
    }
    for (const VertexSet& s : seps) {
      if (s.empty())
        continue;
      if (is_pmc(cur, s.with(a)))
        found.insert(s.with(a));
      if (s.test(a) || prev_sep_set.count(s))
        continue;
      for (const VertexSet& c : full_components(cur, s))
        for (const VertexSet& t : seps) {
          VertexSet cand = s | (t & c);
          if (!(cand == s) && is_pmc(cur, cand))
            found.insert(cand);
        }
    }
    prev_pmcs.assign(found.begin(), found.end());
    prev_seps = std::move(seps);
  }

  std::vector<VertexSet> out;
  for (const VertexSet& p : prev_pmcs) {
    VertexSet s(n);
    for (int v : p)
      s.set(order[v]);
    out.push_back(s);
  }
  return out;
}

} // namespace

std::vector<MinimalSeparator> enumerate_minimal_separators(const Graph& g) {
  std::vector<MinimalSeparator> out;
  for (const VertexSet& s : minimal_separator_sets(g))
    out.push_back(MinimalSeparator{s, full_components(g, s)});
  return out;
}

std::vector<VertexSet> minimal_separator_sets(const Graph& g) { return separator_closure(g); }

bool is_pmc(const Graph& g, const VertexSet& omega) {
  if (omega.empty())
    throw ContractViolation("is_pmc requires a nonempty set");
  std::vector<VertexSet> nbhds;
  for (const VertexSet& d : components(g, g.all() - omega)) {
    VertexSet nd = neighborhood(g, d);
    if (nd == omega)
      return false;
    if (nd.any())
      nbhds.push_back(nd);
  }
  for (int u : omega) {
    VertexSet need = omega - g.neighbors(u);
    need.reset(u);
    if (need.empty())
      continue;
    VertexSet reach(g.n());
    for (const VertexSet& nd : nbhds)
      if (nd.test(u))
        reach |= nd;
    if (!need.is_subset_of(reach))
      return false;
  }
  return true;
}

std::vector<VertexSet> pmc_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (const VertexSet& comp : components(g)) {
    if (comp.count() == 1) {
      out.push_back(comp);
      continue;
    }
    std::vector<int> members = comp.to_vector();
    for (const VertexSet& p : pmcs_connected(g.induced(comp))) {
      VertexSet s(g.n());
      for (int v : p)
        s.set(members[v]);
      out.push_back(s);
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<Pmc> enumerate_pmcs(const Graph& g) {
  std::vector<Pmc> out;
  for (const VertexSet& s : pmc_sets(g))
    out.push_back(Pmc{s});
  const long long a = static_cast<long long>(minimal_separator_sets(g).size());
  const long long b = static_cast<long long>(out.size());
  if (b > g.n() * (a * a + a + 1))
    throw InvariantViolation("PMC count exceeds n(a^2+a+1)");
  return out;
}

namespace {

bool cover_search(const std::vector<VertexSet>& nbhds, const VertexSet& uncovered, int budget,
                  std::vector<int>& picked) {
  if (uncovered.empty())
    return true;
  if (budget == 0)
    return false;
  int u = uncovered.first();
  for (int i = 0; i < static_cast<int>(nbhds.size()); ++i) {
    if (!nbhds[i].test(u))
      continue;
    picked.push_back(i);
    if (cover_search(nbhds, uncovered - nbhds[i], budget - 1, picked))
      return true;
    picked.pop_back();
  }
  return false;
}

} // namespace

std::optional<PmcCover> pmc_cover(const Graph& g, const VertexSet& omega, int cap) {
  for (int v : omega)
    if (g.neighbors(v).with(v) == omega)
      return PmcCover{PmcCover::Kind::ClosedNeighborhood, v, {}};
  std::vector<VertexSet> comps = components(g, g.all() - omega);
  std::vector<VertexSet> nbhds;
  for (const VertexSet& d : comps)
    nbhds.push_back(neighborhood(g, d));
  std::vector<int> picked;
  for (int k = 1; k <= cap; ++k) {
    picked.clear();
    if (cover_search(nbhds, omega, k, picked)) {
      PmcCover out{PmcCover::Kind::ComponentFamily, -1, {}};
      for (int i : picked)
        out.d_list.push_back(comps[i]);
      std::sort(out.d_list.begin(), out.d_list.end(), canonical_less);
      return out;
    }
  }
  return std::nullopt;
}

long long dsw_ceiling(int t) {
  if (t < 2)
    throw ContractViolation("t must be at least 2");
  long long l = (t + 1) / 2;
  return 11 * l * l * (l + 4) * (l + 1) * (l + 1);
}

} // namespace pmc
