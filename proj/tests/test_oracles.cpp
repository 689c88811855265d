#include "test_support.hpp"

#include "pmc/oracles.hpp"
#include "pmc/recognition.hpp"

#include <doctest.h>

using namespace pmc;
using namespace pmc::testing;

TEST_CASE("oracle optima on small named graphs") {
  CHECK(oracle_mwis(cycle_graph(6)).weight == Weight(3));
  CHECK(oracle_mwis(complete_graph(3)).weight == Weight(1));
  CHECK(oracle_induced_forest(complete_bipartite(3, 3)).weight == Weight(4));
  CHECK(oracle_induced_forest(complete_graph(4)).weight == Weight(2));
  CHECK(oracle_max_degree(petersen(), 1).weight == Weight(6));
  CHECK(oracle_max_degree(petersen(), 0).weight == oracle_mwis(petersen()).weight);
  CHECK_THROWS_AS(oracle_mwis(Graph(21)), CapabilityError);
  CHECK_THROWS_AS(oracle_induced_forest(Graph(15)), CapabilityError);
}

TEST_CASE("oracle witnesses are feasible") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = random_graph(10, 0.35, rng).with_weights(random_weights(10, rng));
    for (Problem p : {Problem::Mwis, Problem::InducedForest, Problem::MaxDegree}) {
      SolveResult r = oracle_solve(g, p, 2);
      CHECK(is_feasible(g, p, 2, r.witness));
      CHECK(g.weight(r.witness) == r.weight);
    }
  }
}

TEST_CASE("treewidth and clique oracles") {
  CHECK(oracle_treewidth(cycle_graph(7)) == 2);
  CHECK(oracle_treewidth(complete_graph(5)) == 4);
  CHECK(oracle_treewidth(path_graph(6)) == 1);
  CHECK(oracle_treewidth(petersen()) == 4);
  CHECK(oracle_clique_number(petersen()) == 2);
  CHECK(oracle_minimal_triangulations(cycle_graph(4)).size() == 2);
  CHECK(oracle_minimal_triangulations(cycle_graph(5)).size() == 5);
}

TEST_CASE("fixtures are deterministic and carry verified tags") {
  for (auto kind : {FixtureKind::Random, FixtureKind::ChordalBipartite, FixtureKind::P7FreeBipartite}) {
    Fixture a = gen_fixture(kind, 20, 42);
    Fixture b = gen_fixture(kind, 20, 42);
    CHECK(a.graph == b.graph);
    CHECK(a.graph.n() == 20);
  }
  Fixture cb = gen_fixture(FixtureKind::ChordalBipartite, 30, 1);
  CHECK(is_chordal_bipartite(cb.graph));
  Fixture pb = gen_fixture(FixtureKind::P7FreeBipartite, 20, 5);
  CHECK(bipartition(pb.graph).has_value());
  CHECK_FALSE(find_induced_path(pb.graph, 7).has_value());
  Fixture tf = gen_fixture(FixtureKind::P7FreeBoundedOmega, 16, 6, 2);
  CHECK(oracle_clique_number(tf.graph) <= 2);
  CHECK_FALSE(find_induced_path(tf.graph, 7).has_value());
  CHECK(gen_fixture(FixtureKind::P7FreeBoundedOmega, 5, 1, 1).graph.edge_count() == 0);
  CHECK_THROWS_AS(gen_fixture(FixtureKind::Random, 0, 1), DomainError);
}
