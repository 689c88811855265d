#include "test_support.hpp"

#include "pmc/coloring.hpp"
#include "pmc/oracles.hpp"
#include "pmc/recognition.hpp"

#include <doctest.h>

using namespace pmc;
using namespace pmc::testing;

namespace {

long long bound(int t, int omega) {
  long long b = 1;
  for (int i = 1; i < omega; ++i)
    b *= t - 1;
  return b;
}

} // namespace

TEST_CASE("small cases") {
  Coloring e = gyarfas_coloring(Graph(5), 7);
  CHECK(e.num_colors == 1);
  CHECK(color_classes(e).size() == 1);
  CHECK(color_classes(e)[0] == Graph(5).all());
  CHECK(gyarfas_coloring(Graph(0), 7).num_colors == 0);

  Coloring c4 = gyarfas_coloring(cycle_graph(4), 7);
  CHECK(is_proper(cycle_graph(4), c4));
  CHECK(c4.num_colors <= 6);
  Coloring p = gyarfas_coloring(petersen(), 7);
  CHECK(is_proper(petersen(), p));
}

TEST_CASE("induced path witness") {
  Graph p7 = path_graph(7);
  try {
    gyarfas_coloring(p7, 7);
    FAIL("expected a witness");
  } catch (const InducedPathError& e) {
    CHECK(e.path().size() == 7);
    CHECK(is_induced_path(p7, e.path()));
  }
  CHECK_THROWS_AS(gyarfas_coloring(path_graph(2), 2), InducedPathError);
  CHECK_THROWS_AS(gyarfas_coloring(path_graph(2), 1), ContractViolation);
}

TEST_CASE("bound on P7-free fixtures") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int k = 2 + seed % 3;
    Fixture f = gen_fixture(FixtureKind::P7FreeBoundedOmega, 12 + seed % 20, seed, k);
    Coloring c = gyarfas_coloring(f.graph, 7);
    CHECK(is_proper(f.graph, c));
    int omega = clique_number(f.graph);
    CHECK(c.num_colors <= bound(7, omega));
    for (const VertexSet& cls : color_classes(c))
      CHECK(is_independent(f.graph, cls));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Fixture f = gen_fixture(FixtureKind::P7FreeBipartite, 10 + seed, seed);
    Coloring c = gyarfas_coloring(f.graph, 7);
    CHECK(is_proper(f.graph, c));
    CHECK(c.num_colors <= 6);
  }
}

TEST_CASE("other path lengths") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 80; ++rep) {
    Graph g = random_graph(11, 0.3, rng);
    for (int t = 3; t <= 6; ++t) {
      bool free = !oracle_induced_path(g, t).has_value();
      try {
        Coloring c = gyarfas_coloring(g, t);
        CHECK(is_proper(g, c));
        if (free)
          CHECK(c.num_colors <= bound(t, oracle_clique_number(g)));
      } catch (const InducedPathError& e) {
        CHECK_FALSE(free);
        CHECK(static_cast<int>(e.path().size()) == t);
        CHECK(is_induced_path(g, e.path()));
      }
    }
  }
}
