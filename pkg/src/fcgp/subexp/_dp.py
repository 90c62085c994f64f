# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import (Dict, FrozenSet, Iterable, List, Optional, Tuple, Union)

from ._decomposition import TreeDecomposition
from ..core import (Alpha, DegreeOrdering, Graph, Solution, cut_counts, coerce_direction)
from ..core._rational import RationalLike
from ..errors import InputError
from ..types import Direction


# (selected bag vertices, selected count) -> (scaled partial value, selected local ids)
DpTable = Dict[Tuple[FrozenSet[int], int], Tuple[int, Tuple[int, ...]]]


@dataclass(frozen=True)
class PrefixSubproblem():
    r"""
    The graph induced on a degree prefix `V^j`, with boundary weights towards the rest of the graph.

    Attributes
    ----------
        j : int
            The prefix length.

        prefix_graph : Graph
            `G[V^j]`, relabeled so that local vertex `i` is the `i`-th vertex of the ordering.

        vertices : Tuple[int, ...]
            Original id of every local vertex.

        omega : Tuple[int, ...]
            Per local vertex, the number of its neighbors outside the prefix.
    """
    j: int
    prefix_graph: Graph
    vertices: Tuple[int, ...]
    omega: Tuple[int, ...]

    def __post_init__(self):
        if not (len(self.vertices) == len(self.omega) == self.prefix_graph.n == self.j):
            raise InputError("Prefix Subproblem Sizes Disagree.")
        if any(w < 0 for w in self.omega):
            raise InputError("Boundary Weights Must Be Non-Negative.")

    @property
    def boundary_weight(self) -> Dict[int, int]:
        r"""
        `omega` keyed by original vertex id.
        """
        return dict(zip(self.vertices, self.omega))

    def local(self, vertices: Iterable[int]) -> Tuple[int, ...]:
        r"""
        Local ids of original vertices of the prefix.
        """
        index = {v: i for i, v in enumerate(self.vertices)}
        try:
            return tuple(index[v] for v in vertices)
        except KeyError as e:
            raise InputError(f"Vertex {e.args[0]} Is Not In The Prefix Of Length {self.j}.")


def build_prefix_subproblem(graph: Graph, ordering: DegreeOrdering, j: int) -> PrefixSubproblem:
    r"""
    Build the subproblem on the first :param:`j` vertices of :param:`ordering`.
    """
    prefix_graph, originals = graph.induced(ordering.prefix(j))
    omega = tuple(graph.degree(v) - prefix_graph.degree(i) for i, v in enumerate(originals))
    return PrefixSubproblem(j, prefix_graph, originals, omega)


def weighted_objective(
    subproblem: PrefixSubproblem,
    vertices: Iterable[int],
    alpha: Union[Alpha, RationalLike]
) -> Fraction:
    r"""
    `(1 - alpha) * m(C) + alpha * m(C, V^j - C) + alpha * sum of omega(v) over C`, evaluated directly.

    :param:`vertices` are original ids.
    """
    alpha = Alpha.from_value(alpha)
    local = subproblem.local(vertices)
    inside, boundary = cut_counts(subproblem.prefix_graph, local)
    weight = sum(subproblem.omega[i] for i in set(local))
    return (1 - alpha.value) * inside + alpha.value * (boundary + weight)


class _Fold():
    r"""
    Keeps the better entry per table key: better value first, then the lexicographically smaller selection.
    """
    def __init__(self, maximize: bool):
        self.maximize = maximize

    def keep(self, table: DpTable, key: Tuple[FrozenSet[int], int], value: int, chosen: Tuple[int, ...]):
        current = table.get(key)
        if current is not None:
            if value == current[0]:
                if chosen >= current[1]:
                    return
            elif (value < current[0]) if self.maximize else (value > current[0]):
                return
        table[key] = (value, chosen)


def run_prefix_dp(
    subproblem: PrefixSubproblem,
    decomposition: TreeDecomposition,
    k: int,
    alpha: Union[Alpha, RationalLike],
    direction: Direction,
    forced: Optional[int] = None
) -> Tuple[Solution, int]:
    r"""
    :func:`dp_solve_prefix()` that also reports the total number of table entries created.
    """
    alpha = Alpha.from_value(alpha)
    direction = coerce_direction(direction)
    graph = subproblem.prefix_graph
    if not isinstance(k, int) or not 1 <= k <= graph.n:
        raise InputError(f"Argument 'k' Must Satisfy 1 <= k <= |prefix|, Got {k!r} (|prefix|={graph.n}).")
    decomposition.validate(graph)
    forced_local = None if forced is None else subproblem.local([forced])[0]

    w_in, w_bd, scale = alpha.scaled_weights()
    omega = subproblem.omega
    fold = _Fold(direction == "max")
    tables: Dict[int, DpTable] = {}
    states = 0

    for node in decomposition.nodes:
        table: DpTable = {}
        kind = node.kind
        if kind == "leaf":
            table[(frozenset(), 0)] = (0, ())
        elif kind == "introduce-vertex":
            v = node.vertex
            for (sel, count), (value, chosen) in tables.pop(node.children[0]).items():
                if v != forced_local:
                    fold.keep(table, (sel, count), value, chosen)
                if count < k:
                    # the alpha * omega(v) term is charged when v is decided in
                    fold.keep(table, (sel | {v}, count + 1), value + w_bd * omega[v], tuple(sorted(chosen + (v,))))
        elif kind == "introduce-edge":
            u, v = node.edge
            for (sel, count), (value, chosen) in tables.pop(node.children[0]).items():
                inside = (u in sel) + (v in sel)
                gain = w_in if inside == 2 else (w_bd if inside == 1 else 0)
                fold.keep(table, (sel, count), value + gain, chosen)
        elif kind == "forget":
            v = node.vertex
            for (sel, count), (value, chosen) in tables.pop(node.children[0]).items():
                fold.keep(table, (sel - {v}, count), value, chosen)
        else:
            left = tables.pop(node.children[0])
            right = tables.pop(node.children[1])
            by_selection: Dict[FrozenSet[int], List[Tuple[int, int, Tuple[int, ...]]]] = {}
            for (sel, count), (value, chosen) in right.items():
                by_selection.setdefault(sel, []).append((count, value, chosen))
            for (sel, count), (value, chosen) in left.items():
                # bag vertices were counted and weighted on both sides
                shared_weight = w_bd * sum(omega[v] for v in sel)
                for r_count, r_value, r_chosen in by_selection.get(sel, ()):
                    total = count + r_count - len(sel)
                    if total > k:
                        continue
                    merged = tuple(sorted(set(chosen) | set(r_chosen)))
                    fold.keep(table, (sel, total), value + r_value - shared_weight, merged)
        states += len(table)
        tables[node.id] = table

    entry = tables[decomposition.root].get((frozenset(), k))
    if entry is None:
        raise InputError(f"No Selection Of {k} Prefix Vertices Satisfies The Constraints.")
    value, chosen = entry
    solution = Solution(
        tuple(subproblem.vertices[i] for i in chosen),
        Fraction(value, scale),
        "subexp-dp",
        f"prefix-{subproblem.j}"
    )
    return solution, states


def dp_solve_prefix(
    subproblem: PrefixSubproblem,
    decomposition: TreeDecomposition,
    k: int,
    alpha: Union[Alpha, RationalLike],
    direction: Direction,
    forced: Optional[int] = None
) -> Solution:
    r"""
    Exact optimum of the boundary-weighted objective over k-subsets of a degree prefix, by dynamic
    programming over a nice tree decomposition.

    The objective is `(1 - alpha) * m(C) + alpha * m(C, V^j - C) + alpha * sum of omega(v) over C`.
    With the true boundary weights this equals `cov_alpha(C)` in the full graph. Each edge is charged once,
    at its introduce-edge node; each `alpha * omega(v)` term is charged when `v` is introduced as selected,
    and the double charge of bag vertices is removed at join nodes.

    Parameters
    ----------
        subproblem : PrefixSubproblem
            The prefix graph and its boundary weights.

        decomposition : TreeDecomposition
            A nice decomposition of `subproblem.prefix_graph`.

        k : int
            The cardinality, `1 <= k <= |prefix|`.

        alpha : Union[Alpha, RationalLike]
            The edge-weight parameter.

        direction : Direction
            `"max"` or `"min"`.

        forced : Optional[int], default to `None`
            An original vertex id that every selection must contain.

    Returns
    -------
        Solution
            The optimal selection in original vertex ids; its value is the weighted objective.

    Raises
    -------
        InputError
            If the decomposition is invalid for the prefix graph or `k` is out of range.
    """
    solution, _ = run_prefix_dp(subproblem, decomposition, k, alpha, direction, forced)
    return solution
