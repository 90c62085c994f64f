# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
from typing import (List, Optional, Tuple)

from ..config import get_settings
from ..core import (Graph, popcount)
from ..errors import ResourceLimitError


def greedy_dominating_set(graph: Graph) -> Tuple[int, ...]:
    r"""
    Max-coverage greedy dominating set.

    Repeatedly picks the vertex whose closed neighborhood contains the most undominated vertices
    (ties by smallest id) until every vertex is dominated.

    Parameters
    ----------
        graph : Graph
            The graph to be dominated.

    Returns
    -------
        Tuple[int, ...]
            The chosen vertices, sorted. Its size upper-bounds the domination number.
    """
    closed = [graph.masks[v] | (1 << v) for v in range(graph.n)]
    undominated = (1 << graph.n) - 1
    chosen: List[int] = []
    while undominated:
        best_v, best_gain = -1, 0
        for v in range(graph.n):
            gain = popcount(closed[v] & undominated)
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        undominated &= ~closed[best_v]
    return tuple(sorted(chosen))


def has_dominating_set(graph: Graph, size: int, limit: Optional[int] = None) -> bool:
    r"""
    Decide exactly whether :param:`graph` has a dominating set of at most :param:`size` vertices.

    Bounded search tree: some vertex of the closed neighborhood of an undominated vertex must be chosen,
    so branch over the undominated vertex with the smallest closed neighborhood.

    Parameters
    ----------
        graph : Graph
            The graph to be dominated.

        size : int
            The size bound.

        limit : Optional[int], default to `None`
            Maximum number of search nodes.
            - `None`: Use :attr:`Settings.domination_search_limit`.

    Returns
    -------
        bool
            Whether a dominating set of size at most :param:`size` exists.

    Raises
    -------
        ResourceLimitError
            If the search exceeds :param:`limit` nodes.
    """
    if size >= graph.n:
        return True
    if size < 0:
        return False
    node_limit = get_settings().domination_search_limit if limit is None else limit
    closed = [graph.masks[v] | (1 << v) for v in range(graph.n)]
    reach = max((popcount(mask) for mask in closed), default=0)
    full = (1 << graph.n) - 1
    nodes = 0

    def _branch(dominated: int, budget: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise ResourceLimitError(f"Dominating-Set Search Exceeded {node_limit} Nodes.")
        undominated = full & ~dominated
        if not undominated:
            return True
        if budget == 0 or popcount(undominated) > budget * reach:
            return False
        # the undominated vertex with the fewest ways to be dominated
        target = min(
            (v for v in range(graph.n) if undominated >> v & 1),
            key=lambda v: (popcount(closed[v]), v)
        )
        options = sorted(
            (v for v in range(graph.n) if closed[target] >> v & 1),
            key=lambda v: (-popcount(closed[v] & undominated), v)
        )
        return any(_branch(dominated | closed[v], budget - 1) for v in options)

    return _branch(0, size)
