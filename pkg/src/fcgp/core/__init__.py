# src/fcgp/core/__init__.py
"""
Shared substrate of all solvers: graphs, exact rationals and the objective.

Functions
---------
- :func:`cov_alpha()`: Exact value of `(1 - alpha) * m(S) + alpha * m(S, V - S)`.
- :func:`cut_counts()`: Edge counts inside a vertex set and across its cut.
- :func:`degree_ordering()`: Vertices sorted by degree, ties broken by id.
- :func:`objective_ordering()`: The degree ordering matching Max or Min.
- :func:`is_dominating()`: Domination test, optionally restricted to a vertex subset.
- :func:`parse_edge_list()` / :func:`read_edge_list()`: Parse the edge-list format.
- :func:`decode_edge_list()`: Decode raw edge-list bytes, naming the line of a bad byte.
- :func:`format_edge_list()` / :func:`write_edge_list()`: Serialize to the edge-list format.
- :func:`parse_rational()` / :func:`format_rational()`: Exact rationals from and to `"p/q"`.

Classes
-------
- :class:`Graph`: Immutable simple undirected graph on `0 .. n-1`.
- :class:`Alpha`: The reduced-fraction edge-weight parameter.
- :class:`Instance`: Graph, cardinality, alpha and direction of one solve request.
- :class:`Solution`: A k-subset with its exact value and provenance.
- :class:`DegreeOrdering`: A degree-sorted permutation with prefix access.
"""

from ._graph import (
    Graph,
    popcount,
    mask_of,
    decode_edge_list,
    parse_edge_list,
    read_edge_list,
    format_edge_list,
    write_edge_list
)
from ._rational import (Alpha, parse_rational, format_rational)
from ._objective import (
    Instance,
    Solution,
    DegreeOrdering,
    cov_alpha,
    cut_counts,
    degree_ordering,
    objective_ordering,
    is_dominating,
    coerce_direction
)

__all__ = [
    "Graph",
    "popcount",
    "mask_of",
    "decode_edge_list",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "write_edge_list",
    "Alpha",
    "parse_rational",
    "format_rational",
    "Instance",
    "Solution",
    "DegreeOrdering",
    "cov_alpha",
    "cut_counts",
    "degree_ordering",
    "objective_ordering",
    "is_dominating",
    "coerce_direction"
]
