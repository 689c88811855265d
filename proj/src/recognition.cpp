#include "pmc/recognition.hpp"

#include <algorithm>

namespace pmc {

namespace {

// Extends path[0..len) by induced-path steps until it holds `target`
// vertices. `blocked` is N[path[0..len-1)] (everything a new vertex may not
// touch or coincide with).
bool extend_path(const Graph& g, const VertexSet& allowed, std::vector<int>& path, int target,
                 const VertexSet& blocked) {
  if (static_cast<int>(path.size()) == target)
    return true;
  int last = path.back();
  VertexSet next_blocked = blocked | g.neighbors(last);
  next_blocked.set(last);
  VertexSet cand = (g.neighbors(last) & allowed) - blocked;
  cand.reset(last);
  for (int w : cand) {
    path.push_back(w);
    if (extend_path(g, allowed, path, target, next_blocked))
      return true;
    path.pop_back();
  }
  return false;
}

} // namespace

std::optional<InducedPath> find_induced_path(const Graph& g, int length_at_least) {
  if (length_at_least < 2 || length_at_least > kMaxPathLength)
    throw ContractViolation("induced path length must be within 2..10");
  VertexSet all = g.all();
  std::vector<int> path;
  for (int s = 0; s < g.n(); ++s) {
    path.assign(1, s);
    VertexSet blocked(g.n());
    if (extend_path(g, all, path, length_at_least, blocked))
      return InducedPath{path};
  }
  return std::nullopt;
}

std::optional<InducedPath> find_induced_path_from(const Graph& g, int start, const VertexSet& within,
                                                  int vertex_count) {
  if (vertex_count < 1 || vertex_count > kMaxPathLength)
    throw ContractViolation("induced path length must be within 1..10");
  std::vector<int> path{start};
  VertexSet allowed = within.without(start);
  if (extend_path(g, allowed, path, vertex_count, VertexSet(g.n())))
    return InducedPath{path};
  return std::nullopt;
}

namespace {

// Left arm `arm` (arm[0] = v) is fixed; look for a right arm from v with
// `right` vertices in total, then splice.
bool arms_from(const Graph& g, std::vector<int>& arm, int left, int right, std::vector<int>& out) {
  if (static_cast<int>(arm.size()) < left) {
    int last = arm.back();
    VertexSet blocked(g.n());
    for (std::size_t i = 0; i + 1 < arm.size(); ++i)
      blocked |= g.neighbors(arm[i]).with(arm[i]);
    for (int w : g.neighbors(last) - blocked) {
      if (w == last)
        continue;
      arm.push_back(w);
      if (arms_from(g, arm, left, right, out))
        return true;
      arm.pop_back();
    }
    return false;
  }
  VertexSet blocked(g.n());
  for (std::size_t i = 1; i < arm.size(); ++i)
    blocked |= g.neighbors(arm[i]).with(arm[i]);
  std::vector<int> path{arm[0]};
  if (!extend_path(g, g.all(), path, right, blocked))
    return false;
  out.assign(arm.rbegin(), arm.rend());
  out.insert(out.end(), path.begin() + 1, path.end());
  return true;
}

} // namespace

std::optional<InducedPath> find_induced_path_through(const Graph& g, int v, int t) {
  if (t < 2 || t > kMaxPathLength)
    throw ContractViolation("induced path length must be within 2..10");
  std::vector<int> out;
  // The shorter arm has at most (t+1)/2 vertices including v.
  for (int left = 1; left <= (t + 1) / 2; ++left) {
    std::vector<int> arm{v};
    if (arms_from(g, arm, left, t - left + 1, out))
      return InducedPath{out};
  }
  return std::nullopt;
}

bool is_induced_path(const Graph& g, const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j])
        return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1))
        return false;
    }
  return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& c) {
  std::size_t k = c.size();
  if (k < 3)
    return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (c[i] == c[j])
        return false;
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(c[i], c[j]) != consecutive)
        return false;
    }
  return true;
}

InducedCycle canonical_cycle(std::vector<int> c) {
  if (c.empty())
    return {};
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1])
    std::reverse(c.begin() + 1, c.end());
  return InducedCycle{c};
}

bool is_chordal(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<int> order;
  order.reserve(n);
  VertexSet unnumbered = g.all();
  std::vector<int> position(n, -1);
  while (unnumbered.any()) {
    int best = -1;
    for (int v : unnumbered)
      if (best < 0 || weight[v] > weight[best])
        best = v;
    position[best] = static_cast<int>(order.size());
    order.push_back(best);
    unnumbered.reset(best);
    for (int u : g.neighbors(best) & unnumbered)
      ++weight[u];
  }
  // Earlier-selected neighbours of each vertex must form a clique; it is
  // enough to compare against the latest of them.
  VertexSet seen(n);
  for (int v : order) {
    VertexSet earlier = g.neighbors(v) & seen;
    if (earlier.any()) {
      int parent = -1;
      for (int u : earlier)
        if (parent < 0 || position[u] > position[parent])
          parent = u;
      VertexSet rest = earlier.without(parent);
      if (!rest.is_subset_of(g.neighbors(parent)))
        return false;
    }
    seen.set(v);
  }
  return true;
}

namespace {

std::vector<int> shortest_path_inside(const Graph& g, const VertexSet& allowed, int from, int to) {
  std::vector<int> prev(g.n(), -1);
  VertexSet visited(g.n());
  visited.set(from);
  std::vector<int> queue{from};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    if (u == to)
      break;
    for (int w : (g.neighbors(u) & allowed) - visited) {
      visited.set(w);
      prev[w] = u;
      queue.push_back(w);
    }
  }
  std::vector<int> path;
  if (!visited.test(to))
    return path;
  for (int x = to; x != -1; x = prev[x])
    path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

} // namespace

std::optional<InducedCycle> find_long_hole(const Graph& g) {
  for (int b = 0; b < g.n(); ++b) {
    for (int c : g.neighbors(b)) {
      VertexSet nb = g.neighbors(b).with(b);
      VertexSet nc = g.neighbors(c).with(c);
      VertexSet a_side = g.neighbors(b) - nc;
      VertexSet d_side = g.neighbors(c) - nb;
      if (a_side.empty() || d_side.empty())
        continue;
      VertexSet rest = g.all() - nb - nc;
      for (const VertexSet& k : components(g, rest)) {
        VertexSet touch = neighborhood(g, k);
        VertexSet as = a_side & touch;
        VertexSet ds = d_side & touch;
        for (int a : as) {
          VertexSet far_d = ds - g.neighbors(a);
          far_d.reset(a);
          if (far_d.empty())
            continue;
          int d = far_d.first();
          VertexSet allowed = k;
          allowed.set(a);
          allowed.set(d);
          std::vector<int> q = shortest_path_inside(g, allowed, a, d);
          std::vector<int> cyc{b};
          cyc.insert(cyc.end(), q.begin(), q.end());
          cyc.push_back(c);
          return canonical_cycle(cyc);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_chordal_bipartite(const Graph& g, const VertexSet& side1, const VertexSet& side2) {
  if (side1.intersects(side2) || !((side1 | side2) == g.all()))
    throw DomainError("sides do not partition the vertex set");
  for (int v : side1)
    if (g.neighbors(v).intersects(side1))
      throw DomainError("graph is not bipartite with respect to the given sides");
  for (int v : side2)
    if (g.neighbors(v).intersects(side2))
      throw DomainError("graph is not bipartite with respect to the given sides");
  return !find_long_hole(g).has_value();
}

bool is_chordal_bipartite(const Graph& g) {
  auto sides = bipartition(g);
  if (!sides)
    throw DomainError("graph is not bipartite");
  return is_chordal_bipartite(g, sides->first, sides->second);
}

namespace {

// Builds canonical 6-cycles c1..c6 with c1 the minimum and c2 < c6. Stops
// after the first hit when `first_only`.
void c6_search(const Graph& g, bool first_only, std::vector<InducedCycle>& out) {
  const int n = g.n();
  std::vector<int> path(6);
  for (int c1 = 0; c1 < n; ++c1) {
    VertexSet above(n);
    for (int v = c1 + 1; v < n; ++v)
      above.set(v);
    path[0] = c1;
    VertexSet n1 = g.neighbors(c1).with(c1);
    for (int c2 : g.neighbors(c1) & above) {
      path[1] = c2;
      VertexSet blocked2 = n1 | g.neighbors(c2);
      blocked2.set(c2);
      for (int c3 : (g.neighbors(c2) & above) - n1) {
        path[2] = c3;
        VertexSet blocked3 = blocked2 | g.neighbors(c3);
        blocked3.set(c3);
        for (int c4 : (g.neighbors(c3) & above) - blocked2) {
          path[3] = c4;
          VertexSet blocked4 = blocked3 | g.neighbors(c4);
          blocked4.set(c4);
          for (int c5 : (g.neighbors(c4) & above) - blocked3) {
            path[4] = c5;
            VertexSet forbid = (blocked4 - n1) | g.neighbors(c2) | g.neighbors(c3) | g.neighbors(c4);
            forbid.set(c2);
            forbid.set(c3);
            forbid.set(c4);
            forbid.set(c5);
            VertexSet cand = (g.neighbors(c5) & g.neighbors(c1) & above) - forbid;
            for (int c6 : cand) {
              if (c6 <= c2)
                continue;
              path[5] = c6;
              out.push_back(InducedCycle{path});
              if (first_only)
                return;
            }
          }
        }
      }
    }
  }
}

} // namespace

std::vector<InducedCycle> enumerate_induced_c6(const Graph& g) {
  std::vector<InducedCycle> out;
  c6_search(g, false, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<InducedCycle> find_least_induced_c6(const Graph& g) {
  std::vector<InducedCycle> out;
  c6_search(g, true, out);
  if (out.empty())
    return std::nullopt;
  return out.front();
}

} // namespace pmc
