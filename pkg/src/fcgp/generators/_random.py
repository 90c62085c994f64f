# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import logging
from math import comb
from typing import (List, Optional, Set, Tuple)

import numpy as np
import networkx as nx

from ..config import get_settings
from ..core import Graph
from ..errors import (InputError, ResourceLimitError)


_LOGGER = logging.getLogger(__name__)


def _check_count(value: object, name: str, minimum: int = 0) -> int:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < minimum:
        raise InputError(f"Argument '{name}' Must Be An Integer >= {minimum}, Got {value!r}.")
    return int(value)


def gen_random_gnm(n: int, m: int, seed: Optional[int] = None) -> Graph:
    r"""
    Uniform random simple graph with exactly :param:`m` edges.

    Parameters
    ----------
        n : int
            Number of vertices.

        m : int
            Number of edges, `0 <= m <= C(n, 2)`.

        seed : Optional[int], default to `None`
            Seed of the :func:`numpy.random.default_rng()` generator; equal seeds give equal graphs.

    Returns
    -------
        Graph
            The sampled graph.

    Raises
    -------
        InputError
            If `m` is out of range.
    """
    n = _check_count(n, "n")
    m = _check_count(m, "m")
    slots = comb(n, 2)
    if m > slots:
        raise InputError(f"Argument 'm' Must Satisfy 0 <= m <= C(n, 2) = {slots}, Got {m}.")
    if m == 0:
        return Graph(n)

    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    picked = np.sort(rng.choice(slots, size=m, replace=False))
    return Graph(n, zip(rows[picked].tolist(), cols[picked].tolist()))


def gen_grid(rows: int, cols: int) -> Graph:
    r"""
    The `rows x cols` grid graph; cell `(r, c)` is vertex `r * cols + c`.
    """
    rows = _check_count(rows, "rows", 1)
    cols = _check_count(cols, "cols", 1)
    # from_networkx numbers the sorted (row, col) labels, i.e. row-major
    return Graph.from_networkx(nx.grid_2d_graph(rows, cols))


def _pair_points(rng: np.random.Generator, n: int, d: int) -> Optional[List[Tuple[int, int]]]:
    points = np.repeat(np.arange(n), d)
    rng.shuffle(points)
    seen: Set[Tuple[int, int]] = set()
    for a, b in points.reshape(-1, 2).tolist():
        if a == b:
            return None
        edge = (a, b) if a < b else (b, a)
        if edge in seen:
            return None
        seen.add(edge)
    return sorted(seen)


def gen_regular(n: int, d: int, seed: Optional[int] = None) -> Graph:
    r"""
    Random simple `d`-regular graph from the pairing model, rejecting draws with loops or multi-edges.

    Parameters
    ----------
        n : int
            Number of vertices.

        d : int
            The common degree, `0 <= d < n` with `n * d` even.

        seed : Optional[int], default to `None`
            Seed of the :func:`numpy.random.default_rng()` generator.

    Returns
    -------
        Graph
            A `d`-regular graph.

    Raises
    -------
        InputError
            If no `d`-regular graph on `n` vertices exists.
        ResourceLimitError
            If :attr:`Settings.regular_attempts` draws are all rejected.
    """
    n = _check_count(n, "n", 1)
    d = _check_count(d, "d")
    if d >= n:
        raise InputError(f"Degree Must Satisfy d < n, Got d={d}, n={n}.")
    if n * d % 2:
        raise InputError(f"No {d}-Regular Graph On {n} Vertices: n * d Must Be Even.")
    if d == 0:
        return Graph(n)

    rng = np.random.default_rng(seed)
    attempts = get_settings().regular_attempts
    for attempt in range(1, attempts + 1):
        edges = _pair_points(rng, n, d)
        if edges is not None:
            _LOGGER.debug("gen_regular(n=%d, d=%d): accepted after %d draw(s)", n, d, attempt)
            return Graph(n, edges)
    raise ResourceLimitError(
        f"Pairing Model Rejected {attempts} Draws For n={n}, d={d}. "
        "Raise Settings.regular_attempts Or Use A Smaller Degree."
    )
