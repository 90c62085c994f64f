# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import (List, Optional, Tuple)

from ..core import (Graph, Instance, parse_rational)
from ..errors import InputError


ONE_THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class GapInstanceSpec():
    r"""
    Parameters of the hub/clique construction that defeats top-degree candidate sets for `alpha < 1/3`.

    The graph has `N` hubs, each with `k` private pendant vertices, and a disjoint `k`-clique. Vertex ids:
    hubs `0 .. N-1`, clique `N .. N+k-1`, then the pendants of hub `h` at `N + k + h*k .. N + k + h*k + k-1`.

    Attributes
    ----------
        k : int
            Clique size and solution cardinality, `k >= 2`.

        N : int
            Number of hubs, `N >= 1`.

        mu : Fraction
            `alpha = 1/3 - mu`, with `0 < mu <= 1/3`.
    """
    k: int
    N: int
    mu: Fraction

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 2:
            raise InputError(f"Gap Instance Needs k >= 2 For A Non-Degenerate Clique, Got {self.k!r}.")
        if not isinstance(self.N, int) or isinstance(self.N, bool) or self.N < 1:
            raise InputError(f"Gap Instance Needs N >= 1 Hubs, Got {self.N!r}.")
        mu = parse_rational(self.mu, "mu")
        if not 0 < mu <= ONE_THIRD:
            raise InputError(f"Argument 'mu' Must Satisfy 0 < mu <= 1/3, Got {mu}.")
        object.__setattr__(self, "mu", mu)

    @property
    def alpha(self) -> Fraction:
        return ONE_THIRD - self.mu

    @property
    def n(self) -> int:
        return self.N * (self.k + 1) + self.k

    @property
    def hubs(self) -> Tuple[int, ...]:
        return tuple(range(self.N))

    @property
    def clique(self) -> Tuple[int, ...]:
        return tuple(range(self.N, self.N + self.k))

    def pendants(self, hub: int) -> Tuple[int, ...]:
        start = self.N + self.k + hub * self.k
        return tuple(range(start, start + self.k))


def gen_gap_instance(spec: GapInstanceSpec) -> Instance:
    r"""
    Build the Max instance of :param:`spec`, with `alpha = 1/3 - mu`.

    Hubs have degree `k`, clique vertices `k - 1` and pendants `1`, so every top-degree candidate set of
    at most `N` vertices holds only hubs, while the clique is far better for small `alpha`.
    """
    edges: List[Tuple[int, int]] = []
    for hub in spec.hubs:
        edges.extend((hub, leaf) for leaf in spec.pendants(hub))
    clique = spec.clique
    edges.extend((u, v) for i, u in enumerate(clique) for v in clique[i + 1:])
    return Instance(Graph(spec.n, edges), spec.k, spec.alpha, "max")


@dataclass(frozen=True)
class GapReport():
    r"""
    Closed-form quantities of a gap instance.

    Attributes
    ----------
        alpha : Fraction
            `1/3 - mu`.

        hub_value : Optional[Fraction]
            `alpha * k^2`, the value of any `k` hubs; `None` when `N < k`.

        clique_value : Fraction
            `(1 - alpha) * C(k, 2)`, the value of the clique.

        ratio : Optional[Fraction]
            `hub_value / clique_value`, equal to `2 * alpha * k / ((1 - alpha) * (k - 1))`.

        limit_bound : Fraction
            The limit of the ratio as `k` grows: `(1/3 - mu) / (1/3 + mu/2)`.

        tight : bool
            Whether `k > 1 + 2 / (3 * mu)`, the exact condition for `ratio < 1 - 3 * mu`.

        below_one_minus_3mu : Optional[bool]
            Whether `ratio < 1 - 3 * mu`.
    """
    alpha: Fraction
    hub_value: Optional[Fraction]
    clique_value: Fraction
    ratio: Optional[Fraction]
    limit_bound: Fraction
    tight: bool
    below_one_minus_3mu: Optional[bool]


def gap_report(spec: GapInstanceSpec) -> GapReport:
    r"""
    Evaluate the hub and clique values of :param:`spec` in closed form.
    """
    alpha, mu, k = spec.alpha, spec.mu, spec.k
    clique_value = (1 - alpha) * comb(k, 2)
    hub_value = alpha * k * k if spec.N >= k else None
    ratio = None if hub_value is None else hub_value / clique_value
    return GapReport(
        alpha=alpha,
        hub_value=hub_value,
        clique_value=clique_value,
        ratio=ratio,
        limit_bound=(ONE_THIRD - mu) / (ONE_THIRD + mu / 2),
        tight=k > 1 + Fraction(2) / (3 * mu),
        below_one_minus_3mu=None if ratio is None else ratio < 1 - 3 * mu
    )

