# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import (Any, Dict, Iterable, Iterator, Optional, Tuple, Union)

import numpy as np

from ._graph import Graph
from ._rational import (Alpha, RationalLike, parse_rational)
from ..errors import InputError
from ..types import (Direction, OrderDirection)


DIRECTIONS = ("max", "min")
ORDER_DIRECTIONS = ("non-increasing", "non-decreasing")


def cut_counts(graph: Graph, vertices: Iterable[int]) -> Tuple[int, int]:
    r"""
    Count the edges inside a vertex set and across its cut.

    Parameters
    ----------
        graph : Graph
            The host graph.

        vertices : Iterable[int]
            The vertex set `S`.

    Returns
    -------
        Tuple[int, int]
            `(m(S), m(S, V - S))`.

    Raises
    -------
        InputError
            If a vertex is out of range.
    """
    chosen = graph.check_vertices(vertices)
    degree_sum = 0
    twice_inside = 0
    for v in chosen:
        degree_sum += graph.degree(v)
        twice_inside += len(graph.neighbors(v) & chosen)
    inside = twice_inside // 2
    return inside, degree_sum - twice_inside


def cov_alpha(graph: Graph, vertices: Iterable[int], alpha: Union[Alpha, RationalLike]) -> Fraction:
    r"""
    Evaluate the objective `cov_alpha(S) = (1 - alpha) * m(S) + alpha * m(S, V - S)` exactly.

    Parameters
    ----------
        graph : Graph
            The host graph.

        vertices : Iterable[int]
            The vertex set `S`.

        alpha : Union[Alpha, RationalLike]
            The edge-weight parameter.

    Returns
    -------
        Fraction
            The exact objective value.
    """
    alpha = Alpha.from_value(alpha)
    inside, boundary = cut_counts(graph, vertices)
    return (1 - alpha.value) * inside + alpha.value * boundary


def is_dominating(graph: Graph, dominators: Iterable[int], within: Optional[Iterable[int]] = None) -> bool:
    r"""
    Whether every vertex of :param:`within` (default: all of `V`) is in :param:`dominators` or adjacent to one.
    """
    chosen = graph.check_vertices(dominators)
    targets = range(graph.n) if within is None else graph.check_vertices(within)
    return all(v in chosen or not graph.neighbors(v).isdisjoint(chosen) for v in targets)


@dataclass(frozen=True)
class Instance():
    r"""
    One solve request: choose exactly `k` vertices of `graph` optimizing `cov_alpha` in `direction`.

    Attributes
    ----------
        graph : Graph
            The host graph.

        k : int
            The cardinality, `1 <= k <= n`.

        alpha : Alpha
            The edge-weight parameter. Rationals, integers and `"a/b"` strings are converted.

        direction : Direction, default to `"max"`
            `"max"` or `"min"`.

        p : Optional[Fraction], default to `None`
            Optional non-negative threshold of the decision version.
    """
    graph: Graph
    k: int
    alpha: Alpha
    direction: Direction = "max"
    p: Optional[Fraction] = None

    def __post_init__(self):
        if not isinstance(self.graph, Graph):
            raise InputError(f"Argument 'graph' Must Be A Graph, Got {type(self.graph)}.")
        if not isinstance(self.k, int) or isinstance(self.k, bool) or not 1 <= self.k <= self.graph.n:
            raise InputError(f"Argument 'k' Must Satisfy 1 <= k <= n, Got {self.k!r} (n={self.graph.n}).")
        if self.direction not in DIRECTIONS:
            raise InputError(f"Unknown Direction: {self.direction!r}. Valid Directions: {DIRECTIONS}")
        object.__setattr__(self, "alpha", Alpha.from_value(self.alpha))
        if self.p is not None:
            p = parse_rational(self.p, "p")
            if p < 0:
                raise InputError(f"Threshold 'p' Must Be Non-Negative, Got {p}.")
            object.__setattr__(self, "p", p)

    @property
    def maximize(self) -> bool:
        return self.direction == "max"

    def better(self, a: Fraction, b: Fraction) -> bool:
        r"""
        Whether value :param:`a` is strictly better than :param:`b` in this instance's direction.
        """
        return a > b if self.maximize else a < b

    def accepts(self, value: Fraction) -> Optional[bool]:
        r"""
        Decision version: `value >= p` for Max, `value <= p` for Min; `None` without a threshold.
        """
        if self.p is None:
            return None
        return value >= self.p if self.maximize else value <= self.p


@dataclass(frozen=True)
class Solution():
    r"""
    A k-subset with its exact objective value and provenance.

    Attributes
    ----------
        vertices : Tuple[int, ...]
            Sorted vertex ids.

        value : Fraction
            `cov_alpha` of :attr:`vertices`.

        algorithm : str
            Tag of the algorithm that produced the solution.

        branch : str
            Tag of the control path taken inside that algorithm.
    """
    vertices: Tuple[int, ...]
    value: Fraction
    algorithm: str
    branch: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(int(v) for v in self.vertices)))
        object.__setattr__(self, "value", Fraction(self.value))

    @classmethod
    def evaluate(
        cls,
        graph: Graph,
        vertices: Iterable[int],
        alpha: Union[Alpha, RationalLike],
        algorithm: str,
        branch: str = ""
    ) -> Solution:
        r"""
        Build a :class:`Solution` whose value is recomputed from scratch with :func:`cov_alpha()`.
        """
        chosen = tuple(vertices)
        return cls(chosen, cov_alpha(graph, chosen, alpha), algorithm, branch)

    @property
    def provenance(self) -> str:
        return f"{self.algorithm}/{self.branch}" if self.branch else self.algorithm

    def verify(self, instance: Instance) -> bool:
        r"""
        Check the size and value invariants against :param:`instance`.
        """
        return (
            len(set(self.vertices)) == len(self.vertices) == instance.k
            and self.value == cov_alpha(instance.graph, self.vertices, instance.alpha)
        )


@dataclass(frozen=True)
class DegreeOrdering():
    r"""
    A permutation of the vertices sorted by degree, ties broken by ascending vertex id.
    """
    permutation: Tuple[int, ...]
    direction: OrderDirection = "non-increasing"

    @cached_property
    def positions(self) -> Dict[int, int]:
        r"""
        0-based position of every vertex in the ordering.
        """
        return {v: i for i, v in enumerate(self.permutation)}

    def position(self, v: int) -> int:
        return self.positions[v]

    def prefix(self, j: int) -> Tuple[int, ...]:
        r"""
        The first :param:`j` vertices `v_1 .. v_j`.
        """
        if not 0 <= j <= len(self.permutation):
            raise InputError(f"Prefix Length {j} Out Of Range, Must Be 0 <= j <= {len(self.permutation)}.")
        return self.permutation[:j]

    def __len__(self) -> int:
        return len(self.permutation)

    def __iter__(self) -> Iterator[int]:
        return iter(self.permutation)


def degree_ordering(graph: Graph, direction: OrderDirection = "non-increasing") -> DegreeOrdering:
    r"""
    Sort the vertices by degree.

    Parameters
    ----------
        graph : Graph
            The graph whose vertices are ordered.

        direction : OrderDirection, default to `"non-increasing"`
            - `"non-increasing"`: `d(v_1) >= d(v_2) >= ...`, the ordering used for Max;
            - `"non-decreasing"`: `d(v_1) <= d(v_2) <= ...`, the ordering used for Min.

            Ties are broken by ascending vertex id in both directions.

    Returns
    -------
        DegreeOrdering
            The ordering.
    """
    if direction not in ORDER_DIRECTIONS:
        raise InputError(f"Unknown Ordering Direction: {direction!r}. Valid Directions: {ORDER_DIRECTIONS}")
    degrees = graph.degree_array()
    ids = np.arange(graph.n)
    # lexsort sorts by the last key first
    primary = -degrees if direction == "non-increasing" else degrees
    order = np.lexsort((ids, primary))
    return DegreeOrdering(tuple(int(v) for v in order), direction)


def objective_ordering(graph: Graph, direction: Direction) -> DegreeOrdering:
    r"""
    The degree ordering matching an optimization direction: non-increasing for Max, non-decreasing for Min.
    """
    return degree_ordering(graph, "non-increasing" if direction == "max" else "non-decreasing")


def coerce_direction(direction: Any) -> Direction:
    if direction not in DIRECTIONS:
        raise InputError(f"Unknown Direction: {direction!r}. Valid Directions: {DIRECTIONS}")
    return direction
