#pragma once

// Brute-force ground truth and seeded instance generators. Nothing here
// calls into the solver or enumeration modules; only graph-core primitives.

#include "pmc/graph.hpp"
#include "pmc/problem.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pmc {

SolveResult oracle_mwis(const Graph& g);                 // n <= 20
SolveResult oracle_induced_forest(const Graph& g);       // n <= 14
SolveResult oracle_max_degree(const Graph& g, int k);    // n <= 14
SolveResult oracle_solve(const Graph& g, Problem p, int k);

std::vector<VertexSet> oracle_minseps(const Graph& g);   // n <= 14
std::vector<VertexSet> oracle_pmcs(const Graph& g);      // n <= 14
bool oracle_is_pmc(const Graph& g, const VertexSet& omega);

// Fill-edge sets of all minimal triangulations (n <= 8), each sorted.
std::vector<std::vector<Edge>> oracle_minimal_triangulations(const Graph& g);
// Maximal cliques of a chordal graph, by subset scan (n <= 14).
std::vector<VertexSet> oracle_maximal_cliques(const Graph& g);

int oracle_treewidth(const Graph& g);                    // n <= 14
int oracle_clique_number(const Graph& g);                // n <= 20
// Some induced path on exactly t vertices, by scanning all t-subsets.
std::optional<std::vector<int>> oracle_induced_path(const Graph& g, int t); // n <= 16
bool oracle_is_chordal(const Graph& g);                  // n <= 14

// ---------------------------------------------------------------- fixtures

enum class FixtureKind { Random, ChordalBipartite, P7FreeBipartite, P7FreeBoundedOmega };

std::optional<FixtureKind> parse_fixture_kind(const std::string& name);
std::string fixture_kind_name(FixtureKind k);

struct Fixture {
  Graph graph;
  std::optional<VertexSet> side1;
  std::vector<std::string> tags;
  std::uint64_t seed = 0;
};

// `k` is the clique bound for P7FreeBoundedOmega and is ignored otherwise.
// Class tags are re-verified before returning.
Fixture gen_fixture(FixtureKind kind, int n, std::uint64_t seed, int k = 2);

Graph random_graph(int n, double p, std::mt19937_64& rng);
// Positive weights num/den with num in 1..9, den in 1..3.
std::vector<Weight> random_weights(int n, std::mt19937_64& rng);

} // namespace pmc
