#pragma once

#include "report.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace pmc::cli {

struct Options {
  std::string input = "-";
  GraphFormat format = GraphFormat::EdgeList;
  std::uint64_t seed = 0;
  bool pretty = false;
  bool check_invariants = false;
  bool certify = false;
  // solve
  std::string problem = "mwis";
  int k = 0;
  std::string bags = "pmcs";
  std::string bags_file;
  int state_cap = -1;
  // color
  int t = 7;
  // enumerate
  std::string what = "seps";
  // gen
  std::string kind = "p7free_bipartite";
  int n = 10;
  int clique_bound = 2;
  std::string output;
  // bench
  std::string corpus;
  double budget_ms = 10000;
  std::string csv;
};

RunReport cmd_recognize(const Options& o);
RunReport cmd_color(const Options& o);
RunReport cmd_enumerate(const Options& o);
RunReport cmd_complete_bipartite(const Options& o);
RunReport cmd_solve(const Options& o);
RunReport cmd_params(const Options& o);
RunReport cmd_verify(const Options& o);
// Writes the edge-list text of the generated fixture.
void cmd_gen(const Options& o, std::ostream& out);
// One JSON line per corpus file, in filename order; returns the count.
int cmd_bench(const Options& o, std::ostream& out);

} // namespace pmc::cli
