#include "pmc/problem.hpp"

namespace pmc {

std::string_view problem_name(Problem p) {
  switch (p) {
  case Problem::Mwis:
    return "mwis";
  case Problem::InducedForest:
    return "forest";
  case Problem::MaxDegree:
    return "maxdeg";
  }
  return "?";
}

std::optional<Problem> parse_problem(std::string_view name) {
  if (name == "mwis")
    return Problem::Mwis;
  if (name == "forest")
    return Problem::InducedForest;
  if (name == "maxdeg")
    return Problem::MaxDegree;
  return std::nullopt;
}

bool is_feasible(const Graph& g, Problem p, int k, const VertexSet& s) {
  switch (p) {
  case Problem::Mwis:
    return is_independent(g, s);
  case Problem::MaxDegree:
    for (int v : s)
      if ((g.neighbors(v) & s).count() > k)
        return false;
    return true;
  case Problem::InducedForest: {
    int edges = 0;
    for (int v : s)
      edges += (g.neighbors(v) & s).count();
    edges /= 2;
    int comps = static_cast<int>(components(g, s).size());
    return edges == s.count() - comps;
  }
  }
  return false;
}

} // namespace pmc
