# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import bisect
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import (Iterable, List, Optional, Sequence, Tuple)

from ..config import get_settings
from ..core import (Graph, Instance, Solution, popcount)
from ..errors import (InputError, ResourceLimitError)
from ..types import ExactMethodName
from .._parallel import (parallel_map, resolve_workers)


_LOGGER = logging.getLogger(__name__)

# (best scaled value, best vertex tuple, k-subsets evaluated)
_BlockResult = Tuple[Optional[int], Optional[Tuple[int, ...]], int]


@dataclass(frozen=True)
class ExactResult():
    r"""
    An optimal solution with search statistics.

    Attributes
    ----------
        solution : Solution
            An optimal k-subset; for brute force and branch-and-bound, the lexicographically smallest one.

        nodes_explored : int
            Number of complete k-subsets evaluated (DP table entries for the subexponential solver).

        method : ExactMethodName
            `"brute-force"`, `"branch-and-bound"` or `"subexponential"`.
    """
    solution: Solution
    nodes_explored: int
    method: ExactMethodName

    @property
    def value(self) -> Fraction:
        return self.solution.value

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.solution.vertices


def resolve_candidates(graph: Graph, k: int, candidates: Optional[Iterable[int]]) -> Tuple[int, ...]:
    r"""
    Sorted candidate pool (all of `V` by default), checked to hold at least :param:`k` vertices.
    """
    if candidates is None:
        return tuple(range(graph.n))
    pool = tuple(sorted(graph.check_vertices(candidates)))
    if len(pool) < k:
        raise InputError(f"Candidate Set Must Contain At Least k={k} Vertices, Got {len(pool)}.")
    return pool


def _better(a: int, b: Optional[int], maximize: bool) -> bool:
    if b is None:
        return True
    return a > b if maximize else a < b


def _best_in_block(
    masks: Sequence[int],
    degrees: Sequence[int],
    pool: Sequence[int],
    k: int,
    first: int,
    weights: Tuple[int, int],
    maximize: bool
) -> _BlockResult:
    r"""
    Best k-subset of :param:`pool` whose smallest member is `pool[first]`, in lexicographic order.
    """
    w_in, w_bd = weights
    head = pool[first]
    head_bit = 1 << head
    best: Optional[int] = None
    best_set: Optional[Tuple[int, ...]] = None
    count = 0
    for rest in combinations(pool[first + 1:], k - 1):
        mask = head_bit
        degree_sum = degrees[head]
        for v in rest:
            mask |= 1 << v
            degree_sum += degrees[v]
        twice_inside = popcount(masks[head] & mask)
        for v in rest:
            twice_inside += popcount(masks[v] & mask)
        inside = twice_inside // 2
        value = w_in * inside + w_bd * (degree_sum - twice_inside)
        count += 1
        if _better(value, best, maximize):
            best = value
            best_set = (head,) + rest
    return best, best_set, count


def _block_task(packed: tuple) -> _BlockResult:
    return _best_in_block(*packed)


def solve_brute_force(
    instance: Instance,
    candidates: Optional[Iterable[int]] = None,
    budget: Optional[int] = None,
    workers: Optional[int] = 1
) -> ExactResult:
    r"""
    Exhaustively enumerate all k-subsets of a candidate pool.

    Parameters
    ----------
        instance : Instance
            The instance to be solved.

        candidates : Optional[Iterable[int]], default to `None`
            Restrict the search to these vertices.
            - `None`: Use all of `V`.

        budget : Optional[int], default to `None`
            Maximum number of subsets to enumerate.
            - `None`: Use :attr:`Settings.brute_force_budget`.

        workers : Optional[int], default to `1`
            Worker processes; the enumeration is split by the smallest selected vertex.
            - `None`: Use :attr:`Settings.workers`.

    Returns
    -------
        ExactResult
            The best subset; among optima, the lexicographically smallest vertex tuple.
            The result does not depend on :param:`workers`.

    Raises
    -------
        InputError
            If a candidate is out of range or fewer than `k` candidates are given.
        ResourceLimitError
            If `C(|candidates|, k)` exceeds the budget.
    """
    graph, k = instance.graph, instance.k
    pool = resolve_candidates(graph, k, candidates)
    limit = get_settings().brute_force_budget if budget is None else budget
    total = comb(len(pool), k)
    if total > limit:
        raise ResourceLimitError(
            f"Brute Force Would Enumerate {total} Subsets, Above The Budget Of {limit}. "
            "Use solve_branch_and_bound() Instead."
        )

    w_in, w_bd, scale = instance.alpha.scaled_weights()
    tasks = [
        (graph.masks, graph.degrees, pool, k, first, (w_in, w_bd), instance.maximize)
        for first in range(len(pool) - k + 1)
    ]
    used = resolve_workers(workers)
    results = parallel_map(_block_task, tasks, workers=used)

    best: Optional[int] = None
    best_set: Optional[Tuple[int, ...]] = None
    explored = 0
    # blocks arrive in lexicographic order, so strict improvement keeps the smallest optimum
    for value, vertices, count in results:
        explored += count
        if value is not None and _better(value, best, instance.maximize):
            best, best_set = value, vertices
    assert best is not None and best_set is not None

    _LOGGER.debug("brute force: %d subsets over %d candidates (%d workers)", explored, len(pool), used)
    solution = Solution(best_set, Fraction(best, scale), "brute-force", "exhaustive")
    return ExactResult(solution, explored, "brute-force")


def _suffix_top_sums(degrees: Sequence[int], pool: Sequence[int], k: int) -> List[Tuple[int, ...]]:
    r"""
    For every start index `i`, cumulative sums of the `t <= k` largest degrees in `pool[i:]`.
    """
    result: List[Tuple[int, ...]] = [()] * (len(pool) + 1)
    result[len(pool)] = (0,)
    top: List[int] = []  # negated degrees, ascending
    for i in range(len(pool) - 1, -1, -1):
        bisect.insort(top, -degrees[pool[i]])
        if len(top) > k:
            top.pop()
        sums = [0]
        for neg in top:
            sums.append(sums[-1] - neg)
        result[i] = tuple(sums)
    return result


def solve_branch_and_bound(
    instance: Instance,
    candidates: Optional[Iterable[int]] = None
) -> ExactResult:
    r"""
    Depth-first branch-and-bound over k-subsets in lexicographic order.

    A partial selection is extended only while its optimistic completion can strictly beat the incumbent.
    For Max the completion bound adds `max(alpha, 1 - alpha)` times the largest remaining degrees;
    for Min it adds `min(0, 1 - 2 * alpha)` times them. Both bounds are admissible, so the result is
    the same optimum and the same lexicographic tie-break as :func:`solve_brute_force()`.

    Parameters
    ----------
        instance : Instance
            The instance to be solved.

        candidates : Optional[Iterable[int]], default to `None`
            Restrict the search to these vertices.
            - `None`: Use all of `V`.

    Returns
    -------
        ExactResult
            The lexicographically smallest optimum; :attr:`ExactResult.nodes_explored` counts the complete
            k-subsets evaluated, never more than brute force.
    """
    graph, k = instance.graph, instance.k
    pool = resolve_candidates(graph, k, candidates)
    maximize = instance.maximize
    masks, degrees = graph.masks, graph.degrees

    w_in, w_bd, scale = instance.alpha.scaled_weights()
    # adding v next to b chosen neighbors changes the scaled value by w_bd * d(v) + (w_in - 2 * w_bd) * b
    pair_coef = w_in - 2 * w_bd
    bound_weight = max(w_in, w_bd) if maximize else min(0, w_in - w_bd)
    suffix_top = _suffix_top_sums(degrees, pool, k)

    size = len(pool)
    chosen: List[int] = []
    best: Optional[int] = None
    best_set: Optional[Tuple[int, ...]] = None
    leaves = 0

    def _search(start: int, value: int, mask: int):
        nonlocal best, best_set, leaves
        need = k - len(chosen)
        if need == 0:
            leaves += 1
            if _better(value, best, maximize):
                best = value
                best_set = tuple(chosen)
            return
        for i in range(start, size - need + 1):
            if best is not None:
                bound = value + bound_weight * suffix_top[i][need]
                # the bound is monotone in i, so no later start can do better either
                if (bound <= best) if maximize else (bound >= best):
                    break
            v = pool[i]
            shared = popcount(masks[v] & mask)
            chosen.append(v)
            _search(i + 1, value + w_bd * degrees[v] + pair_coef * shared, mask | (1 << v))
            chosen.pop()

    _search(0, 0, 0)
    assert best is not None and best_set is not None

    _LOGGER.debug("branch and bound: %d of %d subsets evaluated", leaves, comb(size, k))
    solution = Solution(best_set, Fraction(best, scale), "branch-and-bound", "exhaustive")
    return ExactResult(solution, leaves, "branch-and-bound")
