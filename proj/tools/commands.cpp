#include "commands.hpp"

#include "pmc/bipartite.hpp"
#include "pmc/coloring.hpp"
#include "pmc/dp.hpp"
#include "pmc/oracles.hpp"
#include "pmc/separators.hpp"
#include "pmc/structural.hpp"
#include "pmc/treedepth.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pmc::cli {

namespace {

LoadedInput load(const Options& o) { return load_input(o.input, o.format); }

BipartiteGraph bipartite_of(const GraphInput& in) { return BipartiteGraph::make(in.graph, in.side1); }

long long power(long long b, int e) {
  long long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

json bound_check(int n, std::size_t seps, std::size_t pmcs) {
  long long a = static_cast<long long>(seps), b = static_cast<long long>(pmcs);
  return {{"pmcs_le_n_a2_a_1", b <= n * (a * a + a + 1)}, {"seps_le_n_pmcs", a <= n * b}};
}

BagFamily read_bags(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open bag file '" + path + "'");
  std::vector<VertexSet> bags;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    VertexSet bag(n);
    std::string tok;
    while (ls >> tok) {
      int v = -1;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size())
          v = -1;
      } catch (const std::exception&) {
      }
      if (v < 0 || v >= n)
        throw ParseError(line_no, "bad vertex '" + tok + "' in bag file");
      bag.set(v);
    }
    if (bag.any())
      bags.push_back(bag);
  }
  return BagFamily::make(std::move(bags), false);
}

} // namespace

RunReport cmd_recognize(const Options& o) {
  RunReport r{"recognize", load(o)};
  Stopwatch sw;
  const Graph& g = r.input->graph.graph;
  auto p7 = find_induced_path(g, 7);
  auto sides = bipartition(g);
  r.result = {{"p7_free", !p7.has_value()},
              {"chordal", is_chordal(g)},
              {"bipartite", sides.has_value()},
              {"chordal_bipartite", sides ? json(is_chordal_bipartite(g, sides->first, sides->second)) : json(false)},
              {"c6_count", enumerate_induced_c6(g).size()}};
  if (p7)
    r.result["p7_witness"] = p7->vertices;
  r.wall_ms = sw.ms();
  return r;
}

RunReport cmd_color(const Options& o) {
  RunReport r{"color", load(o)};
  Stopwatch sw;
  const Graph& g = r.input->graph.graph;
  Coloring c = gyarfas_coloring(g, o.t);
  int omega = clique_number(g);
  long long bound = power(o.t - 1, omega - 1);
  r.result = {{"t", o.t}, {"num_colors", c.num_colors}, {"omega", omega}, {"bound", bound},
              {"classes", to_json(color_classes(c))}};
  r.wall_ms = sw.ms();
  if (!is_proper(g, c))
    r.invariants.fail("proper", "adjacent vertices share a colour");
  else
    r.invariants.pass("proper");
  if (c.num_colors > bound)
    r.invariants.fail("within_bound", std::to_string(c.num_colors) + " > " + std::to_string(bound));
  else
    r.invariants.pass("within_bound");
  return r;
}

RunReport cmd_enumerate(const Options& o) {
  if (o.what != "seps" && o.what != "pmcs" && o.what != "both")
    throw DomainError("--what must be seps, pmcs or both");
  RunReport r{"enumerate", load(o)};
  Stopwatch sw;
  const Graph& g = r.input->graph.graph;
  auto seps = minimal_separator_sets(g);
  auto pmcs = pmc_sets(g);
  r.result = {{"minimal_separator_count", seps.size()},
              {"pmc_count", pmcs.size()},
              {"bounds", bound_check(g.n(), seps.size(), pmcs.size())}};
  if (o.what != "pmcs")
    r.result["minimal_separators"] = to_json(seps);
  if (o.what != "seps")
    r.result["pmcs"] = to_json(pmcs);
  r.wall_ms = sw.ms();
  if (!o.check_invariants)
    return r;
  if (g.n() > 12) {
    r.invariants.skip("separators_match_oracle", "oracle limited to 12 vertices");
    r.invariants.skip("pmcs_match_oracle", "oracle limited to 12 vertices");
    return r;
  }
  auto canon = [](std::vector<VertexSet> v) {
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
  };
  if (canon(oracle_minseps(g)) == seps)
    r.invariants.pass("separators_match_oracle");
  else
    r.invariants.fail("separators_match_oracle", "enumeration differs from the subset scan");
  if (canon(oracle_pmcs(g)) == pmcs)
    r.invariants.pass("pmcs_match_oracle");
  else
    r.invariants.fail("pmcs_match_oracle", "enumeration differs from the subset scan");
  return r;
}

RunReport cmd_complete_bipartite(const Options& o) {
  RunReport r{"complete-bipartite", load(o)};
  Stopwatch sw;
  BipartiteGraph bg = bipartite_of(r.input->graph);
  CompletionResult res = complete_to_chordal_bipartite(bg, o.check_invariants);
  json trace = json::array();
  std::size_t added = 0;
  for (const CompletionStep& st : res.trace) {
    trace.push_back({{"cycle", to_json(st.cycle)},
                     {"x", st.x},
                     {"y", st.y},
                     {"separator", to_json(st.separator)},
                     {"added", to_json(st.added)}});
    added += st.added.size();
  }
  const Graph& h = res.graph.g;
  r.result = {{"steps", res.trace.size()},
              {"added_edges", added},
              {"final_minsep_count", minimal_separator_sets(h).size()},
              {"final_pmc_count", pmc_sets(h).size()},
              {"side1", to_json(bg.side1)},
              {"trace", trace}};
  r.wall_ms = sw.ms();
  if (o.check_invariants) {
    // Per-step checks raise InvariantViolation inside the loop.
    r.invariants.pass("no_new_p7", std::to_string(res.trace.size()) + " steps checked");
    r.invariants.pass("no_new_c6", std::to_string(res.trace.size()) + " steps checked");
  } else {
    r.invariants.skip("no_new_p7", "run with --check-invariants");
    r.invariants.skip("no_new_c6", "run with --check-invariants");
  }
  if (is_chordal_bipartite(h, res.graph.side1, res.graph.side2))
    r.invariants.pass("chordal_bipartite");
  else
    r.invariants.fail("chordal_bipartite", "completed graph has an induced cycle of length >= 6");
  if (!separator_biclique_criterion(res.graph))
    r.invariants.pass("separators_are_bicliques");
  else
    r.invariants.fail("separators_are_bicliques", "a minimal separator of the completion is not a biclique");
  return r;
}

RunReport cmd_solve(const Options& o) {
  auto problem = parse_problem(o.problem);
  if (!problem)
    throw DomainError("unknown problem '" + o.problem + "' (mwis, forest, maxdeg)");
  RunReport r{"solve", load(o)};
  Stopwatch sw;
  const Graph& g = r.input->graph.graph;
  SolveResult res;
  std::size_t bag_count = 0;
  if (o.bags == "pmcs") {
    BagFamily fam = pmc_family(g);
    bag_count = fam.bags.size();
    res = solve(g, fam, *problem, o.k, o.state_cap);
  } else if (o.bags == "completed") {
    CompletedSolve cs = solve_on_completed(bipartite_of(r.input->graph), *problem, o.k, o.state_cap);
    bag_count = static_cast<std::size_t>(cs.bag_count);
    res = cs.result;
    r.result["completion_steps"] = cs.completion.trace.size();
  } else if (o.bags == "file") {
    if (o.bags_file.empty())
      throw DomainError("--bags file needs --bags-file PATH");
    BagFamily fam = read_bags(o.bags_file, g.n());
    bag_count = fam.bags.size();
    res = solve(g, fam, *problem, o.k, o.state_cap);
  } else {
    throw DomainError("--bags must be pmcs, completed or file");
  }
  r.wall_ms = sw.ms();
  json payload = to_json(res);
  payload["bags"] = o.bags;
  payload["bag_count"] = bag_count;
  r.result.update(payload);
  if (is_feasible(g, res.problem, res.k, res.witness) && g.weight(res.witness) == res.weight)
    r.invariants.pass("witness_feasible");
  else
    r.invariants.fail("witness_feasible", "witness fails the feasibility re-check");
  if (o.certify) {
    int limit = *problem == Problem::Mwis ? 20 : 14;
    if (g.n() > limit) {
      r.invariants.skip("certified", "oracle limited to " + std::to_string(limit) + " vertices");
    } else {
      SolveResult want = oracle_solve(g, *problem, o.k);
      bool ok = res.conditional ? res.weight <= want.weight : res.weight == want.weight;
      std::string detail = "oracle weight " + to_string(want.weight);
      if (ok)
        r.invariants.pass("certified", detail);
      else
        r.invariants.fail("certified", detail);
    }
  }
  return r;
}

RunReport cmd_params(const Options& o) {
  RunReport r{"params", load(o)};
  Stopwatch sw;
  const Graph& g = r.input->graph.graph;
  r.result = {{"treedepth", g.n() <= 14 ? json(treedepth(g)) : json(nullptr)},
              {"treewidth", g.n() <= 64 ? json(treewidth(g)) : json(nullptr)},
              {"degeneracy", degeneracy(g)}};
  r.wall_ms = sw.ms();
  return r;
}

void cmd_gen(const Options& o, std::ostream& out) {
  auto kind = parse_fixture_kind(o.kind);
  if (!kind)
    throw DomainError("unknown fixture kind '" + o.kind +
                      "' (random, chordal_bipartite, p7free_bipartite, p7free_bounded_omega)");
  Fixture f = gen_fixture(*kind, o.n, o.seed, o.clique_bound);
  out << write_edgelist(f.graph, f.side1);
}

int cmd_bench(const Options& o, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(o.corpus))
    throw DomainError("corpus '" + o.corpus + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(o.corpus))
    if (e.is_regular_file())
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::ofstream csv;
  if (!o.csv.empty()) {
    csv.open(o.csv);
    if (!csv)
      throw DomainError("cannot write '" + o.csv + "'");
    csv << "file,n,m,minseps,minsep_ms,pmcs,pmc_ms,completion_steps,completion_ms,mwis_weight,solve_ms,status\n";
  }
  for (const fs::path& p : files) {
    RunReport r{"bench", std::nullopt};
    Stopwatch total;
    json stages = json::object();
    std::string status = "ok";
    std::string row[10];
    try {
      GraphFormat fmt = p.extension() == ".dimacs" || p.extension() == ".col" ? GraphFormat::Dimacs : o.format;
      r.input = load_input(p.string(), fmt);
      const Graph& g = r.input->graph.graph;
      row[0] = std::to_string(g.n());
      row[1] = std::to_string(g.edge_count());
      auto over = [&] { return total.ms() > o.budget_ms; };
      Stopwatch s1;
      auto seps = minimal_separator_sets(g);
      stages["minseps"] = {{"count", seps.size()}, {"ms", s1.ms()}};
      row[2] = std::to_string(seps.size());
      row[3] = std::to_string(s1.ms());
      if (over()) {
        status = "budget";
      } else {
        Stopwatch s2;
        BagFamily fam = pmc_family(g);
        stages["pmcs"] = {{"count", fam.bags.size()}, {"ms", s2.ms()}};
        row[4] = std::to_string(fam.bags.size());
        row[5] = std::to_string(s2.ms());
        auto sides = bipartition(g);
        if (sides && !over()) {
          try {
            Stopwatch s3;
            CompletionResult c = complete_to_chordal_bipartite(bipartite_of(r.input->graph));
            stages["completion"] = {{"steps", c.trace.size()}, {"ms", s3.ms()}};
            row[6] = std::to_string(c.trace.size());
            row[7] = std::to_string(s3.ms());
          } catch (const InducedPathError&) {
            stages["completion"] = {{"skipped", "graph has an induced P7"}};
          }
        }
        if (over()) {
          status = "budget";
        } else {
          Stopwatch s4;
          SolveResult res = solve_mwis(g, fam);
          stages["solve_mwis"] = {{"weight", to_string(res.weight)}, {"ms", s4.ms()}};
          row[8] = to_string(res.weight);
          row[9] = std::to_string(s4.ms());
        }
      }
    } catch (const std::exception& e) {
      status = "error";
      stages["error"] = e.what();
    }
    r.wall_ms = total.ms();
    r.result = {{"file", p.filename().string()}, {"status", status}, {"stages", stages}};
    out << r.to_json().dump() << '\n';
    if (csv.is_open()) {
      csv << p.filename().string();
      for (const std::string& c : row)
        csv << ',' << c;
      csv << ',' << status << '\n';
    }
  }
  return static_cast<int>(files.size());
}

} // namespace pmc::cli
