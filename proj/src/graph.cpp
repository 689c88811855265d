#include "pmc/graph.hpp"

#include <algorithm>

namespace pmc {

std::string to_string(const Weight& w) {
  if (w.denominator() == 1)
    return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

Graph::Graph(int n) : n_(n), adj_(), weights_(static_cast<std::size_t>(std::max(n, 0)), Weight(1)) {
  if (n < 0 || n > VertexSet::kMaxVertices)
    throw CapabilityError("graphs are limited to 512 vertices (got " + std::to_string(n) + ")");
  adj_.assign(n, VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges, std::vector<Weight> weights) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") references a vertex outside 0.." + std::to_string(n - 1));
    if (e.u == e.v)
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    add_edge_unchecked(e.u, e.v);
  }
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != n)
      throw DomainError("weight vector has " + std::to_string(weights.size()) +
                        " entries for " + std::to_string(n) + " vertices");
    for (int v = 0; v < n; ++v)
      if (weights[v] <= Weight(0))
        throw DomainError("weight of vertex " + std::to_string(v) + " is not positive");
    weights_ = std::move(weights);
    weighted_ = std::any_of(weights_.begin(), weights_.end(), [](const Weight& w) { return w != Weight(1); });
  }
}

void Graph::add_edge_unchecked(int u, int v) {
  if (adj_[u].test(v))
    return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

Weight Graph::weight(const VertexSet& s) const {
  Weight total(0);
  for (int v : s)
    total += weights_[v];
  return total;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
      out.push_back({u, v});
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  Graph g = *this;
  for (const Edge& e : extra) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_ || e.u == e.v)
      throw DomainError("invalid edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    g.add_edge_unchecked(e.u, e.v);
  }
  return g;
}

Graph Graph::with_weights(std::vector<Weight> weights) const {
  return Graph(n_, edges(), std::move(weights));
}

Graph Graph::induced(const VertexSet& s) const {
  std::vector<int> index(n_, -1);
  std::vector<int> members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    index[members[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  std::vector<Weight> ws;
  for (int u : members) {
    ws.push_back(weights_[u]);
    for (int v : adj_[u] & s)
      if (u < v)
        es.push_back({index[u], index[v]});
  }
  return Graph(static_cast<int>(members.size()), es, weighted_ ? ws : std::vector<Weight>{});
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.adj_ == b.adj_ && a.weights_ == b.weights_;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed) {
  if (s.width() != g.n())
    throw ContractViolation("vertex set width does not match graph order");
  VertexSet out(g.n());
  for (int v : s)
    out |= g.neighbors(v);
  if (closed)
    out |= s;
  else
    out -= s;
  return out;
}

VertexSet component_of(const Graph& g, const VertexSet& within, int v) {
  VertexSet comp(g.n());
  comp.set(v);
  VertexSet frontier = comp;
  while (frontier.any()) {
    VertexSet grow(g.n());
    for (int u : frontier)
      grow |= g.neighbors(u);
    grow &= within;
    grow -= comp;
    comp |= grow;
    frontier = grow;
  }
  return comp;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  if (within.width() != g.n())
    throw ContractViolation("vertex set width does not match graph order");
  std::vector<VertexSet> out;
  VertexSet rest = within;
  for (int v = rest.first(); v >= 0; v = rest.first()) {
    VertexSet c = component_of(g, within, v);
    rest -= c;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.all()); }

bool is_connected(const Graph& g, const VertexSet& within) {
  int v = within.first();
  return v < 0 || component_of(g, within, v) == within;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s))
      return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (!(s.without(v)).is_subset_of(g.neighbors(v)))
      return false;
  return true;
}

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int v : a)
    if (!b.is_subset_of(g.neighbors(v)))
      return false;
  return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int v : a)
    if (g.neighbors(v).intersects(b))
      return false;
  return true;
}

bool is_module(const Graph& g, const VertexSet& m) {
  if (m.empty())
    throw ContractViolation("is_module requires a nonempty set");
  VertexSet outside = g.all() - m;
  for (int x : outside) {
    const VertexSet& nx = g.neighbors(x);
    if (nx.intersects(m) && !m.is_subset_of(nx))
      return false;
  }
  return true;
}

namespace {

// Smallest module of g[within] containing seed.
VertexSet module_closure(const Graph& g, const VertexSet& within, VertexSet seed) {
  while (true) {
    VertexSet splitters(g.n());
    for (int x : within - seed) {
      const VertexSet& nx = g.neighbors(x);
      if (nx.intersects(seed) && !seed.is_subset_of(nx))
        splitters.set(x);
    }
    if (splitters.empty())
      return seed;
    seed |= splitters;
  }
}

} // namespace

std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& within) {
  if (within.width() != g.n())
    throw ContractViolation("vertex set width does not match graph order");
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (rest.any()) {
    int v = rest.first();
    VertexSet comp(g.n());
    comp.set(v);
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet grow(g.n());
      for (int u : frontier)
        grow |= (within - g.neighbors(u)).without(u);
      grow -= comp;
      comp |= grow;
      frontier = grow;
    }
    rest -= comp;
    out.push_back(comp);
  }
  return out;
}

ModulePartition maximal_modules(const Graph& g, const VertexSet& within) {
  if (within.count() < 2)
    throw DomainError("maximal modules need at least two vertices");
  auto comps = components(g, within);
  if (comps.size() > 1)
    return {comps};
  auto co = anticomponents(g, within);
  if (co.size() > 1)
    return {co};
  // Prime case: u and v share a maximal module iff the smallest module
  // containing both is proper.
  ModulePartition out;
  VertexSet unassigned = within;
  while (unassigned.any()) {
    int v = unassigned.first();
    VertexSet block(g.n());
    block.set(v);
    for (int u : unassigned.without(v)) {
      VertexSet pair(g.n(), {u, v});
      if (!(module_closure(g, within, pair) == within))
        block.set(u);
    }
    unassigned -= block;
    out.blocks.push_back(block);
  }
  return out;
}

ModulePartition maximal_modules(const Graph& g) { return maximal_modules(g, g.all()); }

Graph quotient(const Graph& g, const ModulePartition& parts) {
  VertexSet covered(g.n());
  for (const auto& b : parts.blocks) {
    if (b.empty() || b.intersects(covered))
      throw ContractViolation("quotient blocks must be nonempty and disjoint");
    if (!is_module(g, b))
      throw ContractViolation("quotient block is not a module");
    covered |= b;
  }
  if (!(covered == g.all()))
    throw ContractViolation("quotient blocks must cover every vertex");
  int k = static_cast<int>(parts.blocks.size());
  std::vector<Edge> es;
  std::vector<Weight> ws;
  for (int i = 0; i < k; ++i) {
    ws.push_back(g.weight(parts.blocks[i]));
    for (int j = i + 1; j < k; ++j)
      if (neighborhood(g, parts.blocks[i]).intersects(parts.blocks[j]))
        es.push_back({i, j});
  }
  return Graph(k, es, ws);
}

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v))
        es.push_back({u, v});
  return Graph(g.n(), es, g.weighted() ? g.weights() : std::vector<Weight>{});
}

namespace {

void expand_clique(const Graph& g, int size, VertexSet cand, int& best) {
  if (cand.empty()) {
    best = std::max(best, size);
    return;
  }
  // Greedy colouring bound over the candidates.
  std::vector<int> order;
  std::vector<int> colour_of;
  {
    VertexSet uncoloured = cand;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      VertexSet avail = uncoloured;
      while (avail.any()) {
        int v = avail.first();
        avail.reset(v);
        avail -= g.neighbors(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour_of.push_back(colour);
      }
    }
  }
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (size + colour_of[i] <= best)
      return;
    int v = order[i];
    expand_clique(g, size + 1, cand & g.neighbors(v), best);
    cand.reset(v);
  }
}

} // namespace

int clique_number(const Graph& g, const VertexSet& within) {
  if (within.count() > 64)
    throw CapabilityError("exact clique number is limited to 64 vertices");
  int best = 0;
  expand_clique(g, 0, within, best);
  return best;
}

int clique_number(const Graph& g) { return clique_number(g, g.all()); }

bool is_cograph(const Graph& g, const VertexSet& within) {
  if (within.count() <= 1)
    return true;
  auto comps = components(g, within);
  if (comps.size() > 1)
    return std::all_of(comps.begin(), comps.end(), [&](const VertexSet& c) { return is_cograph(g, c); });
  auto co = anticomponents(g, within);
  if (co.size() > 1)
    return std::all_of(co.begin(), co.end(), [&](const VertexSet& c) { return is_cograph(g, c); });
  return false;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (int root = 0; root < g.n(); ++root) {
    if (side[root] >= 0)
      continue;
    side[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet a(g.n()), b(g.n());
  for (int v = 0; v < g.n(); ++v)
    (side[v] == 0 ? a : b).set(v);
  return std::make_pair(a, b);
}

} // namespace pmc
