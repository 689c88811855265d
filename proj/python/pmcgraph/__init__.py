"""Potential maximal cliques, P7-free bipartite completion and block DP solvers."""

from ._pmc import (
    CapabilityError,
    ContractViolation,
    DomainError,
    Graph,
    InducedPathError,
    InfeasibleFamilyError,
    InvariantViolation,
    ParseError,
    clique_number,
    color,
    complete_to_chordal_bipartite,
    degeneracy,
    find_induced_path,
    gen_fixture,
    induced_c6,
    is_chordal,
    is_chordal_bipartite,
    is_minimal_separator,
    is_pmc,
    minimal_separators,
    oracle_solve,
    parse_graph,
    pmcs,
    solve,
    solve_on_completed,
    treedepth,
    treewidth,
    write_edgelist,
)

__all__ = [name for name in dir() if not name.startswith("_")]
