# src/fcgp/solvers/__init__.py
"""
Exact and approximate solvers.

Functions
---------
- :func:`solve_brute_force()`: Exhaustive k-subset enumeration, the ground-truth oracle.
- :func:`solve_branch_and_bound()`: Exact search pruned by a degree-based completion bound.
- :func:`greedy_extremal_degree()`: The `k` extremal-degree vertices, within `2k^2` of `OPT`.
- :func:`fptas_general()`: `(1 -/+ epsilon)`-approximation for any `alpha > 0`, Max and Min.
- :func:`fptas_topdegree()`: Faster `(1 - epsilon)`-approximation for Max with `alpha >= 1/3`.
- :func:`solve_one_third()`: Closed-form optimum for `alpha = 1/3`.
- :func:`candidate_set()`: The highest-degree candidate pool `V'`.
- :func:`delta_threshold()`: The degree threshold `Delta` of the approximation scheme.
- :func:`check_general_range()` / :func:`check_topdegree_range()`: Reject alpha or direction outside an approximation scheme.

Classes
-------
- :class:`ExactResult`: An optimal solution with search statistics.
- :class:`ApproxResult`: An approximate solution with its branch, guarantee and threshold.
- :class:`CandidateSet`: The top-degree vertices searched by :func:`fptas_topdegree()`.
"""

from ._exact import (ExactResult, solve_brute_force, solve_branch_and_bound)
from ._approx import (
    ApproxResult,
    CandidateSet,
    greedy_extremal_degree,
    fptas_general,
    fptas_topdegree,
    solve_one_third,
    candidate_set,
    candidate_set_size,
    delta_threshold,
    check_general_range,
    check_topdegree_range
)

__all__ = [
    "ExactResult",
    "solve_brute_force",
    "solve_branch_and_bound",
    "ApproxResult",
    "CandidateSet",
    "greedy_extremal_degree",
    "fptas_general",
    "fptas_topdegree",
    "solve_one_third",
    "candidate_set",
    "candidate_set_size",
    "delta_threshold",
    "check_general_range",
    "check_topdegree_range"
]
