# src/fcgp/subexp/__init__.py
"""
Exact solving through degree prefixes and tree decompositions.

Functions
---------
- :func:`solve_subexponential()`: Exact solver for Max with `alpha >= 1/3` and Min with `alpha <= 1/3`.
- :func:`check_exchange_lemma()`: Check that the first optimum in degree order dominates its prefix.
- :func:`build_prefix_subproblem()`: The induced prefix graph with boundary weights.
- :func:`dp_solve_prefix()`: Dynamic program over a nice tree decomposition of a prefix.
- :func:`weighted_objective()`: Direct evaluation of the boundary-weighted objective.
- :func:`tree_decomposition_heuristic()`: Min-fill (or min-degree) nice tree decomposition.
- :func:`nice_decomposition()`: Nice form of a tree of bags.
- :func:`greedy_dominating_set()`: Max-coverage greedy dominating set.
- :func:`has_dominating_set()`: Exact dominating-set decision by bounded search.

Classes
-------
- :class:`PrefixSubproblem`: A degree prefix and its boundary weights.
- :class:`TreeDecomposition`: A validated nice tree decomposition.
- :class:`DecompositionNode`: One node of a :class:`TreeDecomposition`.
- :class:`ExchangeWitness`: The outcome of :func:`check_exchange_lemma()`.
"""

from ._dominating import (greedy_dominating_set, has_dominating_set)
from ._decomposition import (
    DecompositionNode,
    TreeDecomposition,
    nice_decomposition,
    tree_decomposition_heuristic
)
from ._dp import (PrefixSubproblem, build_prefix_subproblem, weighted_objective, dp_solve_prefix)
from ._pipeline import (ExchangeWitness, check_exchange_lemma, solve_subexponential)

__all__ = [
    "greedy_dominating_set",
    "has_dominating_set",
    "DecompositionNode",
    "TreeDecomposition",
    "nice_decomposition",
    "tree_decomposition_heuristic",
    "PrefixSubproblem",
    "build_prefix_subproblem",
    "weighted_objective",
    "dp_solve_prefix",
    "ExchangeWitness",
    "check_exchange_lemma",
    "solve_subexponential"
]
