import itertools
import random
from fractions import Fraction

import pytest

import pmcgraph as pmc

nx = pytest.importorskip("networkx")


def cycle(n):
    return pmc.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(n, p, rng):
    return pmc.Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def brute_mwis(g):
    best = Fraction(0)
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            if all(b not in g.neighbors(a) for a, b in itertools.combinations(s, 2)):
                best = max(best, sum((g.weight(v) for v in s), Fraction(0)))
    return best


def test_graph_roundtrip():
    g = pmc.Graph(3, [(0, 1), (1, 2)], weights=[1, Fraction(3, 2), "5/4"])
    assert (g.n, g.m) == (3, 2)
    assert g.weight(1) == Fraction(3, 2)
    text = pmc.write_edgelist(g)
    h, side1 = pmc.parse_graph(text)
    assert h == g and side1 is None


def test_errors_map_to_python():
    with pytest.raises(pmc.ParseError):
        pmc.parse_graph("2 1\n0 7\n")
    with pytest.raises(ValueError):
        pmc.solve(cycle(4), problem="knapsack")
    with pytest.raises(pmc.InducedPathError):
        pmc.color(pmc.Graph(7, [(i, i + 1) for i in range(6)]), 7)
    with pytest.raises(pmc.InfeasibleFamilyError):
        pmc.solve(cycle(4), bags=[[0, 1]])


def test_c6_basics():
    g = cycle(6)
    assert len(pmc.minimal_separators(g)) == 9
    assert pmc.solve(g)["weight"] == 3
    assert pmc.solve(g, "forest")["weight"] == 5
    assert pmc.induced_c6(g) == [[0, 1, 2, 3, 4, 5]]
    completed, steps = pmc.complete_to_chordal_bipartite(g, check_invariants=True)
    assert len(steps) == 1 and pmc.is_chordal_bipartite(completed)
    assert (pmc.treewidth(g), pmc.treedepth(g), pmc.degeneracy(g)) == (2, 4, 2)


def test_against_networkx_and_brute_force():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 10)
        g = random_graph(n, 0.35, rng)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        assert pmc.is_chordal(g) == nx.is_chordal(h)
        assert pmc.clique_number(g) == max((len(c) for c in nx.find_cliques(h)), default=0)
        assert pmc.solve(g)["weight"] == brute_mwis(g)
        assert pmc.solve(g, "maxdeg", k=1)["weight"] == pmc.oracle_solve(g, "maxdeg", k=1)["weight"]


def test_bipartite_pipeline():
    for seed in range(10):
        g, side1 = pmc.gen_fixture("p7free_bipartite", 12, seed)
        assert pmc.find_induced_path(g, 7) is None
        completed, steps = pmc.complete_to_chordal_bipartite(g, side1, check_invariants=True)
        assert pmc.is_chordal_bipartite(completed)
        res = pmc.solve_on_completed(g, "mwis", side1=side1)
        assert res["weight"] == pmc.oracle_solve(g, "mwis")["weight"]
        ncolors, colors = pmc.color(g)
        assert ncolors <= 6
        assert all(colors[u] != colors[v] for u, v in g.edges())
