#include "pmc/coloring.hpp"

#include <algorithm>

namespace pmc {

namespace {

class Gyarfas {
public:
  Gyarfas(const Graph& g, int t) : g_(g), t_(t), color_(g.n(), -1) {}

  Coloring run() {
    int k = color_set(g_.all(), 0);
    return Coloring{color_, k};
  }

private:
  // Colours g[h] with colours offset.., returns the number used.
  int color_set(const VertexSet& h, int offset) {
    if (h.empty())
      return 0;
    int used = 1;
    for (const VertexSet& comp : components(g_, h)) {
      const int v1 = comp.first();
      color_[v1] = offset;
      std::vector<int> path{v1};
      int rest = 0;
      for (const VertexSet& d : components(g_, comp.without(v1)))
        rest = std::max(rest, grow(d, path, offset + 1));
      used = std::max(used, 1 + rest);
    }
    return used;
  }

  // d is connected, anticomplete to path minus its last vertex, and has a
  // neighbour of the last vertex.
  int grow(const VertexSet& d, std::vector<int>& path, int offset) {
    const int v = path.back();
    VertexSet x = g_.neighbors(v) & d;
    if (static_cast<int>(path.size()) + 1 >= t_) {
      std::vector<int> witness = path;
      witness.push_back(x.first());
      throw InducedPathError(witness, "induced P" + std::to_string(t_) + " met while colouring");
    }
    int cx = color_set(x, offset);
    int rest = 0;
    for (const VertexSet& k : components(g_, d - x)) {
      int u = (x & neighborhood(g_, k)).first();
      path.push_back(u);
      rest = std::max(rest, grow(k, path, offset + cx));
      path.pop_back();
    }
    return cx + rest;
  }

  const Graph& g_;
  int t_;
  std::vector<int> color_;
};

} // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color_of.size()) != g.n())
    return false;
  for (int v = 0; v < g.n(); ++v)
    if (c.color_of[v] < 0 || c.color_of[v] >= c.num_colors)
      return false;
  for (const Edge& e : g.edges())
    if (c.color_of[e.u] == c.color_of[e.v])
      return false;
  return true;
}

Coloring gyarfas_coloring(const Graph& g, int t) {
  if (t < 2)
    throw ContractViolation("path length must be at least 2");
  return Gyarfas(g, t).run();
}

std::vector<VertexSet> color_classes(const Coloring& c) {
  const int n = static_cast<int>(c.color_of.size());
  std::vector<VertexSet> out(c.num_colors, VertexSet(n));
  for (int v = 0; v < n; ++v)
    out.at(c.color_of[v]).set(v);
  return out;
}

} // namespace pmc
