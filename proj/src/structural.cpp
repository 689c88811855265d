#include "pmc/structural.hpp"

#include "pmc/recognition.hpp"

#include <algorithm>
#include <deque>

namespace pmc {

namespace {

[[noreturn]] void raise_p7(const Graph& g, const std::string& where) {
  if (auto p = find_induced_path(g, 7))
    throw InducedPathError(p->vertices, "induced P7 found during " + where);
  throw InvariantViolation(where + " failed on a graph without induced P7");
}

bool is_partial_order(const std::vector<std::vector<bool>>& r) {
  const int m = static_cast<int>(r.size());
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(r[i].size()) != m || !r[i][i])
      return false;
    for (int j = 0; j < m; ++j) {
      if (i != j && r[i][j] && r[j][i])
        return false;
      if (r[i][j])
        for (int k = 0; k < m; ++k)
          if (r[j][k] && !r[i][k])
            return false;
    }
  }
  return true;
}

} // namespace

int two_orders_min(const TwoOrders& t) {
  const int m = t.size();
  if (m == 0)
    throw DomainError("two_orders_min on an empty universe");
  if (static_cast<int>(t.leq2.size()) != m || !is_partial_order(t.leq1) || !is_partial_order(t.leq2))
    throw DomainError("relations are not partial orders on a common universe");
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!t.leq1[a][b] && !t.leq1[b][a] && !t.leq2[a][b] && !t.leq2[b][a])
        throw IncomparablePairError(a, b);
  for (int v = 0; v < m; ++v) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x)
      ok = t.leq1[v][x] || t.leq2[v][x];
    if (ok)
      return v;
  }
  throw InvariantViolation("no common minimum for two covering partial orders");
}

VertexSet find_cograph_dominator(const Graph& g, const VertexSet& s, const VertexSet& a,
                                 const VertexSet& b) {
  if (a.empty() || b.empty())
    throw ContractViolation("full components must be nonempty");
  VertexSet target(g.n());
  for (int v : s)
    if (!b.is_subset_of(g.neighbors(v)))
      target.set(v);
  if (target.empty())
    return VertexSet(g.n()).with(a.first());
  std::vector<int> order;
  VertexSet seen = VertexSet(g.n()).with(a.first());
  std::deque<int> queue{a.first()};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int u : g.neighbors(v) & (a - seen)) {
      seen.set(u);
      queue.push_back(u);
    }
  }
  VertexSet z = a;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (!z.test(*it))
        continue;
      VertexSet smaller = z.without(*it);
      if (smaller.any() && is_connected(g, smaller) && target.is_subset_of(neighborhood(g, smaller))) {
        z = smaller;
        changed = true;
      }
    }
  }
  if (!target.is_subset_of(neighborhood(g, z)))
    throw InvariantViolation("dominator lost domination of the separator");
  if (!is_cograph(g, z))
    raise_p7(g, "cograph dominator construction");
  return z;
}

VertexSet find_x_set(const Graph& g, const VertexSet& s, const VertexSet& a) {
  if (a.count() < 2)
    return a;
  VertexSet x(g.n());
  std::vector<VertexSet> anti = anticomponents(g, a);
  if (anti.size() > 1) {
    for (const VertexSet& c : anti)
      x.set(c.first());
  } else {
    std::vector<VertexSet> blocks = maximal_modules(g, a).blocks;
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& p, const VertexSet& q) { return p.first() < q.first(); });
    for (std::size_t i = 0; i < blocks.size() && x.empty(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        if (g.adjacent(blocks[i].first(), blocks[j].first())) {
          x.set(blocks[i].first());
          x.set(blocks[j].first());
          break;
        }
    if (x.empty())
      throw InvariantViolation("no adjacent pair of maximal modules in a connected component");
  }
  for (int v : s - neighborhood(g, x))
    if (!find_induced_path_from(g, v, a, 4))
      throw InvariantViolation("separator vertex " + std::to_string(v) +
                               " is neither dominated nor starts an induced path into the component");
  return x;
}

namespace {

class CoverBuilder {
public:
  CoverBuilder(const Graph& g, const VertexSet& i_set) : g_(g), i_(i_set) {}

  NeighborhoodCover cover(const VertexSet& z, const VertexSet& j) {
    NeighborhoodCover out{VertexSet(g_.n()), VertexSet(g_.n())};
    if (j.empty())
      return out;
    if (z.count() == 1) {
      out.q_z = z;
      return out;
    }
    std::vector<VertexSet> anti = anticomponents(g_, z);
    if (anti.size() < 2)
      throw InvariantViolation("connected cograph on two or more vertices is anticonnected");
    VertexSet reps(g_.n());
    for (const VertexSet& zi : anti)
      reps.set(zi.first());
    out.q_z |= reps;
    VertexSet jp = j - neighborhood(g_, reps);
    VertexSet earlier(g_.n());
    for (const VertexSet& zi : anti) {
      VertexSet ji = (jp & neighborhood(g_, zi)) - neighborhood(g_, earlier);
      earlier |= zi;
      if (ji.empty())
        continue;
      std::vector<VertexSet> parts = components(g_, zi.without(zi.first()));
      if (parts.empty())
        throw InvariantViolation("vertex outside the representatives' neighbourhood has no anchor");
      NeighborhoodCover sub;
      if (parts.size() == 1) {
        sub = cover(parts[0], ji);
      } else {
        std::vector<int> elems = ji.to_vector();
        const int m = static_cast<int>(elems.size());
        std::vector<VertexSet> by_i, by_part;
        for (int v : elems) {
          by_i.push_back(g_.neighbors(v) & i_);
          VertexSet idx(static_cast<int>(parts.size()));
          for (std::size_t p = 0; p < parts.size(); ++p)
            if (g_.neighbors(v).intersects(parts[p]))
              idx.set(static_cast<int>(p));
          by_part.push_back(idx);
        }
        // Inclusion preorders, with ties broken by position to make them antisymmetric.
        auto refine = [&](const std::vector<VertexSet>& key) {
          std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
              r[a][b] = key[a] == key[b] ? a <= b : key[a].is_subset_of(key[b]);
          return r;
        };
        int w;
        try {
          w = elems[two_orders_min(TwoOrders{refine(by_i), refine(by_part)})];
        } catch (const IncomparablePairError&) {
          raise_p7(g_, "cograph neighbourhood cover");
        }
        int u = (g_.neighbors(w) & i_).first();
        std::size_t jw = 0;
        while (!g_.neighbors(w).intersects(parts[jw]))
          ++jw;
        sub = cover(parts[jw], ji - g_.neighbors(u));
        out.q_i.set(u);
      }
      out.q_z |= sub.q_z;
      out.q_i |= sub.q_i;
    }
    return out;
  }

private:
  const Graph& g_;
  VertexSet i_;
};

} // namespace

NeighborhoodCover cograph_neighborhood_cover(const Graph& g, const VertexSet& z, const VertexSet& i_set,
                                             const VertexSet& j_set) {
  if (z.empty())
    throw DomainError("precondition failed: z is empty");
  if (!is_connected(g, z))
    throw DomainError("precondition failed: z is not connected");
  if (!is_cograph(g, z))
    throw DomainError("precondition failed: z is not a cograph");
  if (!is_independent(g, i_set))
    throw DomainError("precondition failed: i_set is not independent");
  if (i_set.intersects(neighborhood(g, z, true)))
    throw DomainError("precondition failed: i_set meets N[z]");
  if (!is_independent(g, j_set))
    throw DomainError("precondition failed: j_set is not independent");
  if (!j_set.is_subset_of(neighborhood(g, z) & neighborhood(g, i_set)))
    throw DomainError("precondition failed: j_set is not inside N(z) & N(i_set)");
  return CoverBuilder(g, i_set).cover(z, j_set);
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return f;
}

bool is_module_within(const Graph& g, const VertexSet& within, const VertexSet& m) {
  for (int v : within - m) {
    VertexSet seen = g.neighbors(v) & m;
    if (seen.any() && seen != m)
      return false;
  }
  return true;
}

KdlReport check_kdl_triple(const Graph& g, const KdlTriple& triple, const VertexSet& s,
                           const TreedepthStructure& t, int td_budget) {
  KdlReport r;
  const VertexSet& k = triple.k;
  r.k_covers_separator = (s & t.vertices).is_subset_of(k) && (k & t.vertices).count() <= td_budget;

  std::vector<VertexSet> comps = components(g, ~k);
  r.d_are_components = std::all_of(triple.d_list.begin(), triple.d_list.end(), [&](const VertexSet& d) {
    return std::find(comps.begin(), comps.end(), d) != comps.end();
  });

  r.l_are_module_splits = triple.l_map.size() == triple.d_list.size();
  for (std::size_t i = 0; i < triple.d_list.size() && r.l_are_module_splits; ++i) {
    const VertexSet& d = triple.d_list[i];
    const VertexSet& l = triple.l_map[i];
    if (l.empty() || !l.is_subset_of(d) || l == d) {
      r.l_are_module_splits = false;
      break;
    }
    auto all_modules = [&](const VertexSet& part) {
      for (const VertexSet& c : components(g, part))
        if (!is_module_within(g, d, c))
          return false;
      return true;
    };
    r.l_are_module_splits = all_modules(l) || all_modules(d - l);
  }

  std::vector<VertexSet> s_comps = components(g, ~s);
  r.components_respected = true;
  for (const VertexSet& d : comps) {
    bool inside = std::any_of(s_comps.begin(), s_comps.end(),
                              [&](const VertexSet& c) { return d.is_subset_of(c); });
    bool listed = std::find(triple.d_list.begin(), triple.d_list.end(), d) != triple.d_list.end();
    if (!inside && !listed) {
      r.components_respected = false;
      break;
    }
  }
  return r;
}

} // namespace pmc
