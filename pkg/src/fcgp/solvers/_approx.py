# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import math
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import (Optional, Tuple, Union)

from ._exact import (solve_brute_force, solve_branch_and_bound)
from ..core import (Graph, Instance, Solution, objective_ordering, degree_ordering, parse_rational)
from ..core._rational import RationalLike
from ..errors import (InputError, UnsupportedParameterError)
from ..types import ApproxBranchName


_LOGGER = logging.getLogger(__name__)

ONE_THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class ApproxResult():
    r"""
    An approximate solution together with the control path that produced it.

    Attributes
    ----------
        solution : Solution
            The returned k-subset.

        branch : ApproxBranchName
            `"greedy"`, `"bounded-degree"` or `"candidate-enum"`.

        guarantee : Fraction
            The multiplicative factor guaranteed against `OPT`: `1 - epsilon` for Max, `1 + epsilon` for Min.

        delta_threshold : Optional[Fraction]
            The degree threshold `Delta = 2k^2 / (epsilon * alpha) + k` that decided the branch, if any.
    """
    solution: Solution
    branch: ApproxBranchName
    guarantee: Fraction
    delta_threshold: Optional[Fraction] = None

    @property
    def value(self) -> Fraction:
        return self.solution.value


@dataclass(frozen=True)
class CandidateSet():
    r"""
    The highest-degree vertices, in non-increasing degree order (ties by id).
    """
    vertices: Tuple[int, ...]
    size_bound: int

    def __len__(self) -> int:
        return len(self.vertices)


def _check_epsilon(epsilon: RationalLike, allow_one: bool) -> Fraction:
    eps = parse_rational(epsilon, "epsilon")
    upper_ok = eps <= 1 if allow_one else eps < 1
    if not (eps > 0 and upper_ok):
        interval = "0 < epsilon <= 1" if allow_one else "0 < epsilon < 1"
        raise UnsupportedParameterError(f"Argument 'epsilon' Must Satisfy {interval}, Got {eps}.")
    return eps


def delta_threshold(k: int, epsilon: RationalLike, alpha: Union[Fraction, int]) -> Fraction:
    r"""
    The degree threshold `Delta = 2k^2 / (epsilon * alpha) + k`, in exact arithmetic.
    """
    eps = parse_rational(epsilon, "epsilon")
    alpha = Fraction(alpha)
    if eps <= 0 or alpha <= 0:
        raise UnsupportedParameterError(f"Delta Needs epsilon > 0 And alpha > 0, Got epsilon={eps}, alpha={alpha}.")
    return Fraction(2 * k * k) / (eps * alpha) + k


def candidate_set_size(k: int, epsilon: RationalLike) -> int:
    r"""
    `k + ceil(4k / epsilon^2)` with an exact rational ceiling.
    """
    eps = parse_rational(epsilon, "epsilon")
    return k + math.ceil(Fraction(4 * k) / (eps * eps))


def candidate_set(
    graph: Graph,
    k: int,
    epsilon: RationalLike,
    size: Optional[int] = None
) -> CandidateSet:
    r"""
    Build the candidate set `V'` of the highest-degree vertices.

    Parameters
    ----------
        graph : Graph
            The host graph.

        k : int
            The cardinality.

        epsilon : RationalLike
            The accuracy parameter, `0 < epsilon < 1`.

        size : Optional[int], default to `None`
            Override of `|V'|`, e.g. to study a truncated top-`f` set.
            - `None`: Use `k + ceil(4k / epsilon^2)`.

    Returns
    -------
        CandidateSet
            The first `min(n, size)` vertices of the non-increasing degree ordering.
    """
    bound = candidate_set_size(k, _check_epsilon(epsilon, allow_one=False)) if size is None else int(size)
    if bound < k:
        raise InputError(f"Candidate Set Size Must Be At Least k={k}, Got {bound}.")
    ordering = degree_ordering(graph, "non-increasing")
    return CandidateSet(ordering.prefix(min(graph.n, bound)), bound)


def greedy_extremal_degree(instance: Instance) -> Solution:
    r"""
    The `k` vertices of largest degree (Max) or smallest degree (Min), ties broken by id.

    The value is at least `OPT - 2k^2` for Max and at most `OPT + 2k^2` for Min.

    Parameters
    ----------
        instance : Instance
            The instance to be solved.

    Returns
    -------
        Solution
            The greedy k-subset with its exact value.
    """
    ordering = objective_ordering(instance.graph, instance.direction)
    return Solution.evaluate(
        instance.graph,
        ordering.prefix(instance.k),
        instance.alpha,
        "greedy",
        "largest-degrees" if instance.maximize else "smallest-degrees"
    )


def check_general_range(instance: Instance):
    r"""
    Raise :class:`UnsupportedParameterError` unless :func:`fptas_general()` supports the alpha of :param:`instance`.
    """
    if instance.alpha.value == 0:
        raise UnsupportedParameterError(
            "fptas_general Requires alpha > 0: With alpha = 0 The Problem Admits No o(k)-Approximation."
        )


def check_topdegree_range(instance: Instance):
    r"""
    Raise :class:`UnsupportedParameterError` unless :param:`instance` is Max with `alpha >= 1/3`.
    """
    if not instance.maximize:
        raise UnsupportedParameterError("fptas_topdegree Supports Only The Max Direction.")
    if instance.alpha.value < ONE_THIRD:
        raise UnsupportedParameterError(
            f"fptas_topdegree Requires alpha >= 1/3, Got {instance.alpha}. "
            "Use fptas_general For Smaller alpha."
        )


def fptas_general(instance: Instance, epsilon: RationalLike) -> ApproxResult:
    r"""
    FPT approximation scheme for any `alpha > 0`, both directions.

    - Max: when the largest degree exceeds `Delta`, the greedy set is already a `(1 - epsilon)`-approximation;
      otherwise the degree is bounded by `Delta` and the instance is solved exactly.
    - Min: both the greedy set (good when `OPT >= 2k^2 / epsilon`) and an exact solution over the vertices
      of degree at most `Delta` (an optimum of small value has no vertex above `Delta`) are computed,
      and the better one is returned; ties keep the greedy set.

    Parameters
    ----------
        instance : Instance
            The instance to be solved.

        epsilon : RationalLike
            The accuracy parameter, `0 < epsilon <= 1`.

    Returns
    -------
        ApproxResult
            A solution of value at least `(1 - epsilon) * OPT` (Max) or at most `(1 + epsilon) * OPT` (Min).

    Raises
    -------
        UnsupportedParameterError
            If `alpha = 0` (no approximation scheme exists there) or epsilon is out of range.
    """
    check_general_range(instance)
    eps = _check_epsilon(epsilon, allow_one=True)
    alpha = instance.alpha.value
    graph, k = instance.graph, instance.k
    delta = delta_threshold(k, eps, alpha)
    greedy = greedy_extremal_degree(instance)

    if instance.maximize:
        top_degree = graph.max_degree
        if top_degree > delta:
            _LOGGER.debug("fptas_general max: d(v_1)=%d > Delta=%s, greedy branch", top_degree, delta)
            return ApproxResult(greedy, "greedy", 1 - eps, delta)
        _LOGGER.debug("fptas_general max: d(v_1)=%d <= Delta=%s, exact branch", top_degree, delta)
        exact = solve_branch_and_bound(instance).solution
        solution = Solution(exact.vertices, exact.value, "fptas-general", "bounded-degree")
        return ApproxResult(solution, "bounded-degree", 1 - eps, delta)

    pool = [v for v in range(graph.n) if graph.degree(v) <= delta]
    best = ApproxResult(greedy, "greedy", 1 + eps, delta)
    if len(pool) >= k:
        exact = solve_branch_and_bound(instance, candidates=pool).solution
        _LOGGER.debug(
            "fptas_general min: greedy=%s, exact over %d low-degree vertices=%s", greedy.value, len(pool), exact.value
        )
        if exact.value < greedy.value:
            solution = Solution(exact.vertices, exact.value, "fptas-general", "bounded-degree")
            best = ApproxResult(solution, "bounded-degree", 1 + eps, delta)
    else:
        _LOGGER.debug("fptas_general min: only %d vertices of degree <= Delta=%s, greedy only", len(pool), delta)
    return best


def fptas_topdegree(instance: Instance, epsilon: RationalLike) -> ApproxResult:
    r"""
    Faster FPT approximation scheme for Max with `alpha >= 1/3`: enumerate all k-subsets of the
    `k + ceil(4k / epsilon^2)` highest-degree vertices.

    Parameters
    ----------
        instance : Instance
            A Max instance with `alpha >= 1/3`.

        epsilon : RationalLike
            The accuracy parameter, `0 < epsilon < 1`.

    Returns
    -------
        ApproxResult
            A solution of value at least `(1 - epsilon) * OPT`.

    Raises
    -------
        UnsupportedParameterError
            For Min, for `alpha < 1/3` (top-degree candidate sets provably miss good solutions there),
            or for epsilon out of range.
    """
    check_topdegree_range(instance)
    eps = _check_epsilon(epsilon, allow_one=False)
    pool = candidate_set(instance.graph, instance.k, eps)
    _LOGGER.debug("fptas_topdegree: |V'|=%d (bound %d)", len(pool), pool.size_bound)

    exact = solve_brute_force(instance, candidates=pool.vertices).solution
    solution = Solution(exact.vertices, exact.value, "fptas-topdegree", "candidate-enum")
    return ApproxResult(solution, "candidate-enum", 1 - eps, None)


def solve_one_third(instance: Instance) -> Solution:
    r"""
    Closed form for `alpha = 1/3`, where `cov_alpha(S) = (1/3) * sum of d(v) over S` for every `S`:
    the greedy extremal-degree set is optimal in both directions.

    Raises
    -------
        UnsupportedParameterError
            If `alpha != 1/3`.
    """
    if instance.alpha.value != ONE_THIRD:
        raise UnsupportedParameterError(f"The Closed Form Applies Only To alpha = 1/3, Got {instance.alpha}.")
    greedy = greedy_extremal_degree(instance)
    return Solution(greedy.vertices, greedy.value, "one-third", "degree-sum")
