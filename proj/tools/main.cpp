#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace pmc;
using namespace pmc::cli;

namespace {

json error_object(const std::string& sub, const std::string& type, const std::exception& e) {
  json err{{"type", type}, {"message", e.what()}};
  if (auto* pe = dynamic_cast<const ParseError*>(&e))
    err["line"] = pe->line();
  if (auto* ip = dynamic_cast<const InducedPathError*>(&e))
    err["induced_path"] = ip->path();
  return {{"schema_version", kSchemaVersion}, {"subcommand", sub}, {"error", err}};
}

void emit(const json& j, bool pretty) {
  if (pretty)
    std::cout << render_pretty(j);
  else
    std::cout << j.dump() << '\n';
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Potential maximal cliques, P7-free bipartite completion and block DP solvers"};
  app.require_subcommand(1);
  Options o;
  std::string format = "edgelist";

  auto input_flags = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Graph file, '-' for stdin")->capture_default_str();
    sub->add_option("--format", format, "edgelist or dimacs")
        ->check(CLI::IsMember({"edgelist", "dimacs"}))
        ->capture_default_str();
    sub->add_flag("--pretty", o.pretty, "Plain-text table instead of JSON");
    sub->add_flag("--json", [&](std::int64_t) { o.pretty = false; }, "JSON output (default)");
  };

  auto* recognize = app.add_subcommand("recognize", "P7-freeness, chordality, bipartiteness, C6 count");
  input_flags(recognize);

  auto* color = app.add_subcommand("color", "Colouring along induced paths of a P_t-free graph");
  input_flags(color);
  color->add_option("--t", o.t, "Forbidden path length")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Minimal separators and potential maximal cliques");
  input_flags(enumerate);
  enumerate->add_option("--what", o.what, "seps, pmcs or both")->capture_default_str();
  enumerate->add_flag("--check-invariants", o.check_invariants, "Compare with the subset oracles (n <= 12)");

  auto* complete = app.add_subcommand("complete-bipartite", "Complete a P7-free bipartite graph to chordal bipartite");
  input_flags(complete);
  complete->add_flag("--check-invariants", o.check_invariants, "Re-check every completion step");

  auto* solve = app.add_subcommand("solve", "Block DP over a bag family");
  input_flags(solve);
  solve->add_option("--problem", o.problem, "mwis, forest or maxdeg")->capture_default_str();
  solve->add_option("--k", o.k, "Degree bound for maxdeg")->capture_default_str();
  solve->add_option("--bags", o.bags, "pmcs, completed or file")->capture_default_str();
  solve->add_option("--bags-file", o.bags_file, "One bag per line (with --bags file)");
  solve->add_option("--state-cap", o.state_cap, "Skip bag states with more chosen vertices (-1: off)")
      ->capture_default_str();
  solve->add_flag("--certify", o.certify, "Re-run the brute-force oracle on small inputs");

  auto* params = app.add_subcommand("params", "Treedepth, treewidth and degeneracy");
  input_flags(params);

  auto* verify = app.add_subcommand("verify", "Run the lemma regressions that apply to the input");
  input_flags(verify);
  verify->add_option("--k", o.k, "Degree bound for the maxdeg oracle check")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Write a seeded fixture in edge-list format");
  gen->add_option("--kind", o.kind, "random, chordal_bipartite, p7free_bipartite, p7free_bounded_omega")
      ->capture_default_str();
  gen->add_option("--n", o.n, "Vertex count")->capture_default_str();
  gen->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  gen->add_option("--k", o.clique_bound, "Clique bound for p7free_bounded_omega")->capture_default_str();
  gen->add_option("--output", o.output, "Write to a file instead of stdout");

  auto* bench = app.add_subcommand("bench", "Per-instance timings over a corpus directory");
  bench->add_option("--corpus", o.corpus, "Directory of graph files")->required();
  bench->add_option("--format", format, "Format of files without a .dimacs/.col extension")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  bench->add_option("--budget-ms", o.budget_ms, "Per-instance budget; later stages are skipped")
      ->capture_default_str();
  bench->add_option("--csv", o.csv, "Also write a CSV table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"schema_version", kSchemaVersion},
                      {"subcommand", nullptr},
                      {"error", {{"type", "usage"}, {"message", e.what()}}}}
                     .dump()
              << '\n';
    return 1;
  }
  o.format = format == "dimacs" ? GraphFormat::Dimacs : GraphFormat::EdgeList;

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const std::map<std::string, RunReport (*)(const Options&)> reports{
      {"recognize", cmd_recognize}, {"color", cmd_color},   {"enumerate", cmd_enumerate},
      {"complete-bipartite", cmd_complete_bipartite},       {"solve", cmd_solve},
      {"params", cmd_params},       {"verify", cmd_verify},
  };
  try {
    if (name == "gen") {
      if (o.output.empty()) {
        cmd_gen(o, std::cout);
      } else {
        std::ofstream out(o.output);
        if (!out)
          throw DomainError("cannot write '" + o.output + "'");
        cmd_gen(o, out);
      }
      return 0;
    }
    if (name == "bench") {
      cmd_bench(o, std::cout);
      return 0;
    }
    RunReport r = reports.at(name)(o);
    emit(r.to_json(), o.pretty);
    return r.invariants.any_failed() ? 2 : 0;
  } catch (const InvariantViolation& e) {
    emit(error_object(name, "invariant_violation", e), o.pretty);
    return 2;
  } catch (const ParseError& e) {
    emit(error_object(name, "parse_error", e), o.pretty);
    return 1;
  } catch (const InducedPathError& e) {
    emit(error_object(name, "induced_path", e), o.pretty);
    return 1;
  } catch (const CapabilityError& e) {
    emit(error_object(name, "capability", e), o.pretty);
    return 1;
  } catch (const DomainError& e) {
    emit(error_object(name, "domain", e), o.pretty);
    return 1;
  } catch (const ContractViolation& e) {
    emit(error_object(name, "contract", e), o.pretty);
    return 1;
  } catch (const std::exception& e) {
    emit(error_object(name, "error", e), o.pretty);
    return 1;
  }
}
