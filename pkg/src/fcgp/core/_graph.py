# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import re
from pathlib import Path
from functools import cached_property
from typing import (Any, FrozenSet, Iterable, List, Sequence, Tuple, Union)

import numpy as np
import networkx as nx

from ..errors import (InputError, EdgeListParseError)


Edge = Tuple[int, int]

_DECIMAL = re.compile(r"^[0-9]+$")


def popcount(mask: int) -> int:
    r"""
    Number of set bits of a non-negative integer.
    """
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    r"""
    Bitset of a vertex collection.
    """
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph():
    r"""
    A simple undirected graph on the dense vertex ids `0 .. n-1`.

    Instances are immutable: the edge list is normalized to sorted pairs `(u, v)` with `u < v`,
    and adjacency, degrees and neighbor bitsets are derived once.
    """
    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 0:
            raise InputError(f"Vertex Count Must Be A Non-Negative Integer, Got {n!r}.")
        n = int(n)

        seen = set()
        for edge in edges:
            try:
                u, v = (int(x) for x in edge)
            except (TypeError, ValueError):
                raise InputError(f"Edge Must Be A Pair Of Vertex Ids, Got {edge!r}.")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"Edge {(u, v)} Has An Endpoint Out Of Range 0..{n - 1}.")
            if u == v:
                raise InputError(f"Self-Loop At Vertex {u} Is Not Allowed In A Simple Graph.")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise InputError(f"Duplicate Edge {pair} Is Not Allowed In A Simple Graph.")
            seen.add(pair)

        neighbors: List[set] = [set() for _ in range(n)]
        for u, v in seen:
            neighbors[u].add(v)
            neighbors[v].add(u)

        self.__n = n
        self.__edges: Tuple[Edge, ...] = tuple(sorted(seen))
        self.__adjacency: Tuple[FrozenSet[int], ...] = tuple(frozenset(nbrs) for nbrs in neighbors)
        self.__degrees: Tuple[int, ...] = tuple(len(nbrs) for nbrs in neighbors)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
        r"""
        Create a :class:`Graph` from a vertex count and an iterable of vertex pairs.

        Raises
        -------
            InputError
                On out-of-range endpoints, self-loops or duplicate edges.
        """
        return cls(n, edges)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        r"""
        Create a :class:`Graph` from a :class:`networkx.Graph`, numbering its nodes in sorted order.
        """
        if g.is_directed() or g.is_multigraph():
            raise InputError("Only Simple Undirected networkx Graphs Are Supported.")
        relabeled = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls(relabeled.number_of_nodes(), relabeled.edges())

    def to_networkx(self) -> nx.Graph:
        r"""
        Convert to a :class:`networkx.Graph` with the same vertex ids.
        """
        g = nx.Graph()
        g.add_nodes_from(range(self.__n))
        g.add_edges_from(self.__edges)
        return g

    @property
    def n(self) -> int:
        return self.__n

    @property
    def m(self) -> int:
        return len(self.__edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.__edges

    @property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        return self.__adjacency

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self.__degrees

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        r"""
        Neighbor bitsets, one per vertex.
        """
        return tuple(mask_of(nbrs) for nbrs in self.__adjacency)

    @cached_property
    def max_degree(self) -> int:
        return max(self.__degrees, default=0)

    def degree(self, v: int) -> int:
        return self.__degrees[v]

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.__adjacency[v]

    def degree_array(self) -> np.ndarray:
        r"""
        Degrees as an `int64` :class:`numpy.ndarray`.
        """
        return np.asarray(self.__degrees, dtype=np.int64)

    def check_vertices(self, vertices: Iterable[Any]) -> FrozenSet[int]:
        r"""
        Validate a vertex collection against this graph.

        Returns
        -------
            FrozenSet[int]
                The vertices as a set of :class:`int`.

        Raises
        -------
            InputError
                If a vertex is not an integer in range `0 .. n-1`.
        """
        result = set()
        for v in vertices:
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
                raise InputError(f"Vertex Must Be An Integer, Got {v!r}.")
            if not 0 <= v < self.__n:
                raise InputError(f"Vertex {v} Out Of Range, Must Be 0 <= v < {self.__n}.")
            result.add(int(v))
        return frozenset(result)

    def induced(self, vertices: Sequence[int]) -> Tuple[Graph, Tuple[int, ...]]:
        r"""
        Induced subgraph on :param:`vertices`, relabeled so that `vertices[i]` becomes vertex `i`.

        Returns
        -------
            Tuple[Graph, Tuple[int, ...]]
                The subgraph and the original id of every new vertex.
        """
        originals = tuple(int(v) for v in vertices)
        if len(self.check_vertices(originals)) != len(originals):
            raise InputError("Induced Subgraph Vertices Must Be Distinct.")
        local = {v: i for i, v in enumerate(originals)}
        edges = [
            (local[u], local[v])
            for u, v in self.__edges
            if u in local and v in local
        ]
        return Graph(len(originals), edges), originals

    def relabel(self, permutation: Sequence[int]) -> Graph:
        r"""
        Relabel the whole graph: new vertex `i` is old vertex `permutation[i]`.
        """
        if len(permutation) != self.__n:
            raise InputError(f"Permutation Must Have Length {self.__n}, Got {len(permutation)}.")
        graph, _ = self.induced(permutation)
        return graph

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.__n == other.n and self.__edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.__n, self.__edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.__n}, m={self.m})"


def format_edge_list(graph: Graph) -> str:
    r"""
    Serialize a graph to the edge-list format: a `n m` header, then one `u v` line per edge with `u < v`.
    """
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(graph: Graph, path: Union[str, Path]) -> Path:
    r"""
    Write :func:`format_edge_list()` output to :param:`path` (UTF-8, LF line endings).
    """
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(format_edge_list(graph))
    return path


def _parse_ints(line: str, line_no: int) -> Tuple[int, int]:
    tokens = line.split()
    if len(tokens) != 2 or not all(_DECIMAL.match(t) for t in tokens):
        raise EdgeListParseError("Expected Two Non-Negative Decimal Integers", line_no, line)
    return int(tokens[0]), int(tokens[1])


def parse_edge_list(text: str) -> Graph:
    r"""
    Parse the edge-list format.

    Parameters
    ----------
        text : str
            File content: line 1 `n m`, then exactly `m` lines `u v` with `0 <= u < v < n`.
            Blank lines after the last edge are ignored.

    Returns
    -------
        Graph
            The parsed graph.

    Raises
    -------
        EdgeListParseError
            On a malformed header or edge line, an out-of-range or unordered pair, a self-loop,
            a duplicate edge, or an edge count that disagrees with the header.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EdgeListParseError("Empty Edge List, Expected A 'n m' Header Line")

    n, m = _parse_ints(lines[0], 1)
    body = lines[1:]
    if len(body) != m:
        raise EdgeListParseError(f"Header Declares {m} Edges But {len(body)} Edge Lines Follow")

    seen = set()
    edges: List[Edge] = []
    for line_no, line in enumerate(body, start=2):
        u, v = _parse_ints(line, line_no)
        if u == v:
            raise EdgeListParseError("Self-Loop", line_no, line)
        if not u < v:
            raise EdgeListParseError("Edge Endpoints Must Satisfy u < v", line_no, line)
        if v >= n:
            raise EdgeListParseError(f"Vertex Out Of Range 0..{n - 1}", line_no, line)
        if (u, v) in seen:
            raise EdgeListParseError("Duplicate Edge", line_no, line)
        seen.add((u, v))
        edges.append((u, v))

    return Graph(n, edges)


def decode_edge_list(data: bytes) -> str:
    r"""
    Decode raw edge-list bytes as UTF-8, one line at a time.

    Raises
    -------
        EdgeListParseError
            Naming the first line that is not valid UTF-8.
    """
    lines = []
    for line_no, raw in enumerate(data.splitlines(keepends=True), start=1):
        try:
            lines.append(raw.decode("utf-8"))
        except UnicodeDecodeError as e:
            shown = raw.rstrip(b"\r\n").decode("utf-8", errors="replace")
            raise EdgeListParseError(f"Invalid UTF-8 Byte At Column {e.start + 1}", line_no, shown) from None
    return "".join(lines)


def read_edge_list(path: Union[str, Path]) -> Graph:
    r"""
    Read and parse an edge-list file. See :func:`parse_edge_list()`.
    """
    return parse_edge_list(decode_edge_list(Path(path).read_bytes()))
