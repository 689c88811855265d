#include "pmc/bipartite.hpp"
#include "pmc/coloring.hpp"
#include "pmc/dp.hpp"
#include "pmc/graph_io.hpp"
#include "pmc/oracles.hpp"
#include "pmc/recognition.hpp"
#include "pmc/separators.hpp"
#include "pmc/treedepth.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pmc;

namespace {

py::object fraction(const Weight& w) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(w.numerator(), w.denominator());
}

Weight to_weight(const py::handle& h) {
  if (py::isinstance<py::int_>(h))
    return Weight(h.cast<std::int64_t>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return Weight(h.attr("numerator").cast<std::int64_t>(), h.attr("denominator").cast<std::int64_t>());
  if (py::isinstance<py::str>(h))
    return parse_weight(h.cast<std::string>());
  throw DomainError("weights must be int, Fraction or 'p/q' strings");
}

VertexSet to_set(const Graph& g, const std::vector<int>& vs) {
  VertexSet s(g.n());
  for (int v : vs) {
    if (v < 0 || v >= g.n())
      throw DomainError("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

std::vector<std::vector<int>> to_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const VertexSet& s : sets)
    out.push_back(s.to_vector());
  return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges, const std::optional<py::list>& weights) {
  std::vector<Edge> es;
  for (auto [u, v] : edges)
    es.push_back({u, v});
  std::vector<Weight> ws;
  if (weights)
    for (const py::handle& w : *weights)
      ws.push_back(to_weight(w));
  return Graph(n, es, ws);
}

py::dict solve_result(const SolveResult& r) {
  py::dict d;
  d["problem"] = std::string(problem_name(r.problem));
  d["weight"] = fraction(r.weight);
  d["witness"] = r.witness.to_vector();
  d["conditional"] = r.conditional;
  d["reason"] = r.reason;
  return d;
}

Problem problem_of(const std::string& name) {
  auto p = parse_problem(name);
  if (!p)
    throw DomainError("unknown problem '" + name + "' (mwis, forest, maxdeg)");
  return *p;
}

BipartiteGraph bipartite(const Graph& g, const std::optional<std::vector<int>>& side1) {
  std::optional<VertexSet> s;
  if (side1)
    s = to_set(g, *side1);
  return BipartiteGraph::make(g, s);
}

} // namespace

PYBIND11_MODULE(_pmc, m) {
  m.doc() = "Potential maximal cliques, P7-free bipartite completion and block DP solvers";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", domain.ptr());
  py::register_exception<InducedPathError>(m, "InducedPathError", domain.ptr());
  py::register_exception<InfeasibleFamilyError>(m, "InfeasibleFamilyError", domain.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_OverflowError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{},
           py::arg("weights") = std::nullopt)
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (Edge e : g.edges())
               out.push_back({e.u, e.v});
             return out;
           })
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("weight", [](const Graph& g, int v) { return fraction(g.weight(v)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "parse_graph",
      [](const std::string& text, const std::string& format) {
        GraphInput in = parse_graph(text, format == "dimacs" ? GraphFormat::Dimacs : GraphFormat::EdgeList);
        std::optional<std::vector<int>> side1;
        if (in.side1)
          side1 = in.side1->to_vector();
        return py::make_tuple(in.graph, side1);
      },
      py::arg("text"), py::arg("format") = "edgelist");
  m.def(
      "write_edgelist",
      [](const Graph& g, const std::optional<std::vector<int>>& side1) {
        std::optional<VertexSet> s;
        if (side1)
          s = to_set(g, *side1);
        return write_edgelist(g, s);
      },
      py::arg("graph"), py::arg("side1") = std::nullopt);

  m.def("minimal_separators", [](const Graph& g) { return to_lists(minimal_separator_sets(g)); });
  m.def("pmcs", [](const Graph& g) { return to_lists(pmc_sets(g)); });
  m.def("is_minimal_separator",
        [](const Graph& g, const std::vector<int>& s) { return is_minimal_separator(g, to_set(g, s)); });
  m.def("is_pmc", [](const Graph& g, const std::vector<int>& s) { return is_pmc(g, to_set(g, s)); });

  m.def("is_chordal", &is_chordal);
  m.def("is_chordal_bipartite", [](const Graph& g) { return is_chordal_bipartite(g); });
  m.def("find_induced_path", [](const Graph& g, int t) -> std::optional<std::vector<int>> {
    if (auto p = find_induced_path(g, t))
      return p->vertices;
    return std::nullopt;
  });
  m.def("induced_c6", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const InducedCycle& c : enumerate_induced_c6(g))
      out.push_back(c.vertices);
    return out;
  });
  m.def("clique_number", [](const Graph& g) { return clique_number(g); });

  m.def(
      "color",
      [](const Graph& g, int t) {
        Coloring c = gyarfas_coloring(g, t);
        return py::make_tuple(c.num_colors, c.color_of);
      },
      py::arg("graph"), py::arg("t") = 7);

  m.def(
      "solve",
      [](const Graph& g, const std::string& problem, int k, int state_cap,
         const std::optional<std::vector<std::vector<int>>>& bags) {
        BagFamily fam;
        if (bags) {
          std::vector<VertexSet> sets;
          for (const auto& b : *bags)
            sets.push_back(to_set(g, b));
          fam = BagFamily::make(std::move(sets), false);
        } else {
          fam = pmc_family(g);
        }
        return solve_result(solve(g, fam, problem_of(problem), k, state_cap));
      },
      py::arg("graph"), py::arg("problem") = "mwis", py::arg("k") = 0, py::arg("state_cap") = -1,
      py::arg("bags") = std::nullopt);

  m.def(
      "oracle_solve",
      [](const Graph& g, const std::string& problem, int k) {
        return solve_result(oracle_solve(g, problem_of(problem), k));
      },
      py::arg("graph"), py::arg("problem") = "mwis", py::arg("k") = 0);

  m.def(
      "complete_to_chordal_bipartite",
      [](const Graph& g, const std::optional<std::vector<int>>& side1, bool check) {
        CompletionResult r = complete_to_chordal_bipartite(bipartite(g, side1), check);
        py::list steps;
        for (const CompletionStep& st : r.trace) {
          py::dict d;
          d["cycle"] = st.cycle.vertices;
          d["x"] = st.x;
          d["y"] = st.y;
          d["separator"] = st.separator.to_vector();
          std::vector<std::pair<int, int>> added;
          for (Edge e : st.added)
            added.push_back({e.u, e.v});
          d["added"] = added;
          steps.append(d);
        }
        return py::make_tuple(r.graph.g, steps);
      },
      py::arg("graph"), py::arg("side1") = std::nullopt, py::arg("check_invariants") = false);

  m.def(
      "solve_on_completed",
      [](const Graph& g, const std::string& problem, int k, const std::optional<std::vector<int>>& side1) {
        CompletedSolve cs = solve_on_completed(bipartite(g, side1), problem_of(problem), k);
        py::dict d = solve_result(cs.result);
        d["bag_count"] = cs.bag_count;
        d["completion_steps"] = cs.completion.trace.size();
        return d;
      },
      py::arg("graph"), py::arg("problem") = "mwis", py::arg("k") = 0, py::arg("side1") = std::nullopt);

  m.def("treedepth", &treedepth);
  m.def("treewidth", &treewidth);
  m.def("degeneracy", &degeneracy);

  m.def(
      "gen_fixture",
      [](const std::string& kind, int n, std::uint64_t seed, int k) {
        auto fk = parse_fixture_kind(kind);
        if (!fk)
          throw DomainError("unknown fixture kind '" + kind + "'");
        Fixture f = gen_fixture(*fk, n, seed, k);
        std::optional<std::vector<int>> side1;
        if (f.side1)
          side1 = f.side1->to_vector();
        return py::make_tuple(f.graph, side1);
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 0, py::arg("k") = 2);
}
