#include "pmc/treedepth.hpp"

#include "pmc/dp.hpp"
#include "pmc/recognition.hpp"

#include <algorithm>
#include <numeric>

namespace pmc {

TreedepthStructure TreedepthStructure::empty(int n, int d) {
  return TreedepthStructure{d, VertexSet(n), std::vector<int>(n, -1), std::vector<int>(n, 0)};
}

VertexSet TreedepthStructure::ancestors(int v) const {
  VertexSet out(vertices.width());
  for (int u = v; u >= 0; u = parent[u])
    out.set(u);
  return out;
}

bool TreedepthStructure::comparable(int u, int v) const {
  if (depth[u] > depth[v])
    std::swap(u, v);
  while (depth[v] > depth[u])
    v = parent[v];
  return u == v;
}

VertexSet TreedepthStructure::level(int alpha) const {
  VertexSet out(vertices.width());
  for (int v : vertices)
    if (depth[v] == alpha)
      out.set(v);
  return out;
}

bool structure_less(const TreedepthStructure& a, const TreedepthStructure& b) {
  if (a.vertices != b.vertices)
    return canonical_less(a.vertices, b.vertices);
  if (a.depth != b.depth)
    return a.depth < b.depth;
  return a.parent < b.parent;
}

bool is_treedepth_structure(const Graph& g, const TreedepthStructure& t) {
  const int n = g.n();
  if (t.d < 0 || t.vertices.width() != n || static_cast<int>(t.parent.size()) != n ||
      static_cast<int>(t.depth.size()) != n)
    return false;
  for (int v = 0; v < n; ++v) {
    if (!t.vertices.test(v)) {
      if (t.parent[v] != -1 || t.depth[v] != 0)
        return false;
      continue;
    }
    int p = t.parent[v];
    if (p < 0) {
      if (t.depth[v] != 1)
        return false;
    } else if (p >= n || !t.vertices.test(p) || t.depth[v] != t.depth[p] + 1) {
      return false;
    }
    if (t.depth[v] > t.d)
      return false;
  }
  for (int v : t.vertices)
    for (int u : g.neighbors(v) & t.vertices)
      if (u < v && !t.comparable(u, v))
        return false;
  return true;
}

bool is_maximal(const Graph& g, const TreedepthStructure& t) {
  for (int v : ~t.vertices) {
    VertexSet nb = g.neighbors(v) & t.vertices;
    if (nb.empty())
      return false;
    for (int p : t.vertices)
      if (t.depth[p] < t.d && nb.is_subset_of(t.ancestors(p)))
        return false;
  }
  return true;
}

namespace {

class StructureEnumerator {
public:
  StructureEnumerator(const Graph& g, int d, const std::function<bool(const TreedepthStructure&)>& visit)
      : g_(g), d_(d), visit_(visit), t_(TreedepthStructure::empty(g.n(), d)), anc_(g.n(), VertexSet(g.n())) {}

  void run() { assign_depth(0); }

private:
  // Phase one: depth of each vertex, with adjacent vertices on one level pruned.
  bool assign_depth(int v) {
    if (v == g_.n()) {
      order_.clear();
      for (int a = 2; a <= d_; ++a)
        for (int u : t_.level(a))
          order_.push_back(u);
      return assign_parent(0);
    }
    if (!assign_depth(v + 1))
      return false;
    for (int a = 1; a <= d_; ++a) {
      bool clash = false;
      for (int u : g_.neighbors(v))
        if (u < v && t_.depth[u] == a) {
          clash = true;
          break;
        }
      if (clash)
        continue;
      t_.depth[v] = a;
      t_.vertices.set(v);
      bool go_on = assign_depth(v + 1);
      t_.depth[v] = 0;
      t_.vertices.reset(v);
      if (!go_on)
        return false;
    }
    return true;
  }

  // Phase two: parents level by level; a vertex must see only ancestors above it.
  bool assign_parent(std::size_t i) {
    if (i == order_.size())
      return visit_(t_);
    const int v = order_[i];
    const int a = t_.depth[v];
    VertexSet above(g_.n());
    for (int u : g_.neighbors(v) & t_.vertices)
      if (t_.depth[u] < a)
        above.set(u);
    for (int p : t_.vertices) {
      if (t_.depth[p] != a - 1)
        continue;
      VertexSet ap = a - 1 == 1 ? VertexSet(g_.n()).with(p) : anc_[p];
      if (!above.is_subset_of(ap))
        continue;
      t_.parent[v] = p;
      anc_[v] = ap.with(v);
      bool go_on = assign_parent(i + 1);
      t_.parent[v] = -1;
      if (!go_on)
        return false;
    }
    return true;
  }

  const Graph& g_;
  int d_;
  const std::function<bool(const TreedepthStructure&)>& visit_;
  TreedepthStructure t_;
  std::vector<VertexSet> anc_;
  std::vector<int> order_;
};

} // namespace

void for_each_treedepth_structure(const Graph& g, int d,
                                  const std::function<bool(const TreedepthStructure&)>& visit) {
  if (d < 0)
    throw DomainError("treedepth bound must be non-negative");
  StructureEnumerator(g, d, visit).run();
}

std::vector<EnumeratedStructure> enumerate_treedepth_structures(const Graph& g, int d,
                                                                long long max_count) {
  if (max_count < 0 && g.n() > 12)
    throw CapabilityError("unbounded structure enumeration is limited to 12 vertices");
  std::vector<TreedepthStructure> all;
  for_each_treedepth_structure(g, d, [&](const TreedepthStructure& t) {
    all.push_back(t);
    return true;
  });
  std::sort(all.begin(), all.end(), structure_less);
  if (max_count >= 0 && static_cast<long long>(all.size()) > max_count)
    all.resize(static_cast<std::size_t>(max_count));
  std::vector<EnumeratedStructure> out;
  out.reserve(all.size());
  for (TreedepthStructure& t : all) {
    bool m = is_maximal(g, t);
    out.push_back({std::move(t), m});
  }
  return out;
}

bool is_t_aligned(const Graph& g, const TreedepthStructure& t, const std::vector<Edge>& fill) {
  if (!is_chordal(g.with_edges(fill)))
    throw DomainError("g plus the fill edges is not chordal");
  for (const Edge& e : fill) {
    if (t.depth[e.u] == t.d || t.depth[e.v] == t.d)
      return false;
    if (t.contains(e.u) && t.contains(e.v) && !t.comparable(e.u, e.v))
      return false;
  }
  return true;
}

std::optional<int> container_defect(const VertexSet& s, const VertexSet& cand,
                                    const TreedepthStructure& t) {
  if (!s.is_subset_of(cand))
    return std::nullopt;
  return (cand & t.vertices).count() - (s & t.vertices).count();
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const VertexSet& b : bags)
    w = std::max(w, b.count() - 1);
  return w;
}

bool is_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int k = static_cast<int>(td.bags.size());
  if (static_cast<int>(td.parent.size()) != k)
    return false;
  if (k == 0)
    return g.n() == 0;
  int roots = 0;
  for (int i = 0; i < k; ++i) {
    if (td.bags[i].width() != g.n())
      return false;
    if (td.parent[i] < 0)
      ++roots;
    else if (td.parent[i] >= k)
      return false;
  }
  if (roots != 1)
    return false;
  for (int i = 0; i < k; ++i) {
    int steps = 0;
    for (int j = i; td.parent[j] >= 0; j = td.parent[j])
      if (++steps > k)
        return false;
  }
  for (int v = 0; v < g.n(); ++v) {
    int tops = 0;
    for (int i = 0; i < k; ++i)
      if (td.bags[i].test(v) && (td.parent[i] < 0 || !td.bags[td.parent[i]].test(v)))
        ++tops;
    if (tops != 1)
      return false;
  }
  for (const Edge& e : g.edges()) {
    bool covered = std::any_of(td.bags.begin(), td.bags.end(),
                               [&](const VertexSet& b) { return b.test(e.u) && b.test(e.v); });
    if (!covered)
      return false;
  }
  return true;
}

TreeDecomposition clique_tree(const Graph& h) {
  if (!is_chordal(h))
    throw DomainError("clique tree requested for a non-chordal graph");
  const int n = h.n();
  TreeDecomposition td;
  if (n == 0)
    return td;
  // Maximum cardinality search; its reverse is a perfect elimination order.
  std::vector<int> weight(n, 0), order;
  VertexSet left = h.all();
  while (left.any()) {
    int best = -1;
    for (int v : left)
      if (best < 0 || weight[v] > weight[best])
        best = v;
    order.push_back(best);
    left.reset(best);
    for (int u : h.neighbors(best) & left)
      ++weight[u];
  }
  VertexSet seen(n);
  std::vector<VertexSet> cliques;
  for (int v : order) {
    VertexSet c = (h.neighbors(v) & seen).with(v);
    seen.set(v);
    cliques.erase(std::remove_if(cliques.begin(), cliques.end(),
                                 [&](const VertexSet& o) { return o.is_subset_of(c); }),
                  cliques.end());
    cliques.push_back(c);
  }
  std::sort(cliques.begin(), cliques.end(), canonical_less);
  // Maximum-weight spanning tree on intersection sizes (Prim).
  const int k = static_cast<int>(cliques.size());
  td.bags = cliques;
  td.parent.assign(k, -1);
  std::vector<bool> in(k, false);
  std::vector<int> best(k, -1), link(k, -1);
  in[0] = true;
  for (int j = 1; j < k; ++j) {
    best[j] = (cliques[0] & cliques[j]).count();
    link[j] = 0;
  }
  for (int step = 1; step < k; ++step) {
    int pick = -1;
    for (int j = 0; j < k; ++j)
      if (!in[j] && (pick < 0 || best[j] > best[pick]))
        pick = j;
    in[pick] = true;
    td.parent[pick] = link[pick];
    for (int j = 0; j < k; ++j) {
      int w = (cliques[pick] & cliques[j]).count();
      if (!in[j] && w > best[j]) {
        best[j] = w;
        link[j] = pick;
      }
    }
  }
  return td;
}

namespace {

int td_rec(const std::vector<std::uint32_t>& adj, std::uint32_t mask, std::vector<std::int8_t>& memo) {
  if (mask == 0)
    return 0;
  if (memo[mask] >= 0)
    return memo[mask];
  // Split into components first.
  std::uint32_t low = mask & (~mask + 1);
  std::uint32_t comp = low, frontier = low;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint32_t add = adj[v] & mask & ~comp;
    comp |= add;
    frontier |= add;
  }
  int best;
  if (comp != mask) {
    best = std::max(td_rec(adj, comp, memo), td_rec(adj, mask & ~comp, memo));
  } else {
    best = std::popcount(mask);
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      best = std::min(best, 1 + td_rec(adj, mask & ~(1u << v), memo));
    }
  }
  memo[mask] = static_cast<std::int8_t>(best);
  return best;
}

} // namespace

int treedepth(const Graph& g) {
  const int n = g.n();
  if (n > 14)
    throw CapabilityError("exact treedepth is limited to 14 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  return td_rec(adj, n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1), memo);
}

int treewidth(const Graph& g) { return treewidth_via_blocks(g); }

int degeneracy(const Graph& g) {
  VertexSet left = g.all();
  int best = 0;
  while (left.any()) {
    int pick = -1, deg = 0;
    for (int v : left) {
      int dv = (g.neighbors(v) & left).count();
      if (pick < 0 || dv < deg) {
        pick = v;
        deg = dv;
      }
    }
    best = std::max(best, deg);
    left.reset(pick);
  }
  return best;
}

bool check_maximality_neighbor_property(const Graph& g, const TreedepthStructure& t,
                                        const VertexSet& omega) {
  VertexSet outside = t.vertices - omega;
  for (int v : omega - t.vertices)
    if (!g.neighbors(v).intersects(outside))
      return false;
  return true;
}

} // namespace pmc
