# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import (List, Optional, Tuple)

from ._decomposition import tree_decomposition_heuristic
from ._dominating import (greedy_dominating_set, has_dominating_set)
from ._dp import (build_prefix_subproblem, run_prefix_dp)
from ..config import (default_width_budget, get_settings)
from ..core import (DegreeOrdering, Graph, Instance, Solution, is_dominating, objective_ordering)
from ..errors import (GateExhaustedError, ResourceLimitError, UnsupportedParameterError)
from ..solvers import (ExactResult, solve_brute_force)
from .._parallel import (parallel_map, resolve_workers)


_LOGGER = logging.getLogger(__name__)

ONE_THIRD = Fraction(1, 3)

# (j, skip reason or "", prefix optimum, DP table entries)
_PrefixOutcome = Tuple[int, str, Optional[Solution], int]


@dataclass(frozen=True)
class ExchangeWitness():
    r"""
    Outcome of one exchange-property check.

    Attributes
    ----------
        solution : Solution
            The optimum that is smallest in the lexicographic order of ordering positions.

        order : DegreeOrdering
            The degree ordering the check was run against.

        j : int
            Prefix length ending at the last vertex of :attr:`solution` in :attr:`order`.

        dominated : bool
            Whether :attr:`solution` dominates the induced graph on that prefix.
    """
    solution: Solution
    order: DegreeOrdering
    j: int
    dominated: bool


def _check_range(instance: Instance, operation: str):
    alpha = instance.alpha.value
    if instance.maximize and alpha < ONE_THIRD:
        raise UnsupportedParameterError(f"{operation} Requires alpha >= 1/3 For Max, Got {instance.alpha}.")
    if not instance.maximize and alpha > ONE_THIRD:
        raise UnsupportedParameterError(f"{operation} Requires alpha <= 1/3 For Min, Got {instance.alpha}.")


def check_exchange_lemma(instance: Instance, budget: Optional[int] = None) -> ExchangeWitness:
    r"""
    Verify the exchange property on one instance: the optimum that comes first in the degree ordering
    dominates every vertex up to its last member.

    The instance is relabeled by the ordering, so the brute-force tie-break (lexicographically smallest
    vertex tuple) picks the optimum that is smallest by ordering positions.

    Parameters
    ----------
        instance : Instance
            A Max instance with `alpha >= 1/3` or a Min instance with `alpha <= 1/3`, small enough for brute force.

        budget : Optional[int], default to `None`
            Passed to :func:`solve_brute_force()`.

    Returns
    -------
        ExchangeWitness
            The optimum in original ids, the prefix length and the domination verdict.

    Raises
    -------
        UnsupportedParameterError
            If alpha is outside the range of the direction.
    """
    _check_range(instance, "check_exchange_lemma")
    graph = instance.graph
    order = objective_ordering(graph, instance.direction)
    relabeled = Instance(graph.relabel(order.permutation), instance.k, instance.alpha, instance.direction)
    positions = solve_brute_force(relabeled, budget=budget).solution.vertices

    j = positions[-1] + 1
    prefix_graph = relabeled.graph.induced(range(j))[0]
    dominated = is_dominating(prefix_graph, positions)
    solution = Solution.evaluate(
        graph, (order.permutation[i] for i in positions), instance.alpha, "brute-force", "exchange-check"
    )
    return ExchangeWitness(solution, order, j, dominated)


def _passes_domination_gate(prefix: Graph, bound: int) -> bool:
    if len(greedy_dominating_set(prefix)) <= bound:
        return True
    try:
        return has_dominating_set(prefix, bound)
    except ResourceLimitError:
        # undecided prefixes stay in; the width gate still applies
        return True


def _solve_prefix(
    instance: Instance,
    order: DegreeOrdering,
    j: int,
    width_budget: int,
    dominating_factor: int
) -> _PrefixOutcome:
    subproblem = build_prefix_subproblem(instance.graph, order, j)
    if not _passes_domination_gate(subproblem.prefix_graph, dominating_factor * instance.k):
        return j, "domination", None, 0
    decomposition = tree_decomposition_heuristic(subproblem.prefix_graph)
    if decomposition.width > width_budget:
        return j, f"width {decomposition.width}", None, 0
    solution, states = run_prefix_dp(
        subproblem,
        decomposition,
        instance.k,
        instance.alpha,
        instance.direction,
        forced=order.permutation[j - 1]
    )
    return j, "", solution, states


def _prefix_task(packed: tuple) -> _PrefixOutcome:
    return _solve_prefix(*packed)


def solve_subexponential(
    instance: Instance,
    width_budget: Optional[int] = None,
    workers: Optional[int] = 1
) -> ExactResult:
    r"""
    Exact solver for Max with `alpha >= 1/3` and Min with `alpha <= 1/3`, fast on sparse inputs.

    Some optimum `C` has a last vertex `v_j` in the degree ordering and dominates the prefix `V^j`. For every
    `j` from `k` to `n`, the prefix is kept only if it has a dominating set of at most
    `dominating_factor * k` vertices and its heuristic tree decomposition has width at most
    :param:`width_budget`; the best `C` containing `v_j` inside the prefix is then found by dynamic
    programming, with the edges leaving the prefix folded into vertex weights.

    Parameters
    ----------
        instance : Instance
            The instance to be solved.

        width_budget : Optional[int], default to `None`
            Largest decomposition width the dynamic program accepts.
            - `None`: Use `max(ceil(3 * sqrt(k)), 4)`.

        workers : Optional[int], default to `1`
            Worker processes; prefixes are independent.
            - `None`: Use :attr:`Settings.workers`.

    Returns
    -------
        ExactResult
            The best solution over all processed prefixes (ties keep the shortest prefix);
            :attr:`ExactResult.nodes_explored` is the total number of DP table entries.

    Raises
    -------
        UnsupportedParameterError
            If alpha is outside the range of the direction.
        GateExhaustedError
            If every prefix is skipped by the gates.
    """
    _check_range(instance, "solve_subexponential")
    graph, k = instance.graph, instance.k
    budget = default_width_budget(k) if width_budget is None else int(width_budget)
    factor = get_settings().dominating_factor
    order = objective_ordering(graph, instance.direction)

    tasks = [(instance, order, j, budget, factor) for j in range(k, graph.n + 1)]
    outcomes: List[_PrefixOutcome] = parallel_map(_prefix_task, tasks, workers=resolve_workers(workers))

    best: Optional[Solution] = None
    best_j = 0
    states = 0
    skipped = []
    for j, reason, solution, count in outcomes:
        states += count
        if solution is None:
            skipped.append(j)
            _LOGGER.debug("subexp: prefix %d skipped (%s)", j, reason)
            continue
        if best is None or instance.better(solution.value, best.value):
            best, best_j = solution, j

    if best is None:
        raise GateExhaustedError(
            f"Every Prefix Was Skipped By The Domination/Width Gates (Width Budget {budget}). "
            "Retry With A Larger width_budget."
        )
    if 2 * len(skipped) > len(outcomes):
        _LOGGER.warning(
            "subexp: %d of %d prefixes skipped by the gates, the result may not be optimal; "
            "consider a larger width budget than %d", len(skipped), len(outcomes), budget
        )

    solution = Solution.evaluate(graph, best.vertices, instance.alpha, "subexponential", f"prefix-{best_j}")
    if solution.value != best.value:
        raise AssertionError(f"Prefix Objective {best.value} Disagrees With cov_alpha {solution.value}.")
    return ExactResult(solution, states, "subexponential")
