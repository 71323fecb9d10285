"""Hamiltonicity of graph squares via block-cutvertex structure.

The square of a graph G joins every pair of vertices at distance at most two.
This package decides whether the square of a connected graph is hamiltonian,
or hamiltonian connected, by analysing the block-cutvertex decomposition of G,
and produces explicit witness cycles and paths when the answer is yes.
"""

from .graph import (
    Graph,
    GraphParseError,
    edge,
    parse_edge_list,
    edge_list_text,
)
from .decomposition import decompose, Decomposition, Block
from .labelling import decide_hamiltonicity, HamiltonicityVerdict
from .hamconn import decide_hamiltonian_connectedness, HamConnVerdict
from .construct import construct_ham_cycle, construct_ham_path, ConstructionError
from .oracle import (
    find_ham_cycle,
    find_ham_path,
    verify_property,
    BudgetExceeded,
)
from .counterexamples import counterexample_for, SubstitutionRecipe, substitute

__all__ = [
    "Graph",
    "GraphParseError",
    "edge",
    "parse_edge_list",
    "edge_list_text",
    "decompose",
    "Decomposition",
    "Block",
    "decide_hamiltonicity",
    "HamiltonicityVerdict",
    "decide_hamiltonian_connectedness",
    "HamConnVerdict",
    "construct_ham_cycle",
    "construct_ham_path",
    "ConstructionError",
    "find_ham_cycle",
    "find_ham_path",
    "verify_property",
    "BudgetExceeded",
    "counterexample_for",
    "SubstitutionRecipe",
    "substitute",
]

__version__ = "0.1.0"
