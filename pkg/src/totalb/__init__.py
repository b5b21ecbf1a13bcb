"""Total b-chromatic colourings: verifier, exact solver, caterpillar constructions and hardness gadget."""

from .caterpillar import SolveOutcome, classify_pivoted, find_dense_paths, solve
from .colouring import TotalColouring, Verdict, total_m_degree, verify
from .exact import solve_exact
from .graph import E, Element, Graph, V, decompose_caterpillar, parse_edge_list

__all__ = [
    "E",
    "Element",
    "Graph",
    "SolveOutcome",
    "TotalColouring",
    "V",
    "Verdict",
    "classify_pivoted",
    "decompose_caterpillar",
    "find_dense_paths",
    "parse_edge_list",
    "solve",
    "solve_exact",
    "total_m_degree",
    "verify",
]
