# -*- coding: utf-8 -*-
# Python version: 3.9
# @TianZhen

from __future__ import annotations
import logging
from collections import Counter
from dataclasses import dataclass
from typing import (Dict, FrozenSet, List, Optional, Sequence, Set, Tuple)

import networkx as nx
from networkx.algorithms.approximation import (treewidth_min_degree, treewidth_min_fill_in)

from ..core import Graph
from ..errors import InputError
from ..types import NodeKind


_LOGGER = logging.getLogger(__name__)

NODE_KINDS = ("leaf", "introduce-vertex", "introduce-edge", "forget", "join")


@dataclass(frozen=True)
class DecompositionNode():
    r"""
    One node of a nice tree decomposition.

    Attributes
    ----------
        id : int
            Position in :attr:`TreeDecomposition.nodes`; children always have smaller ids.

        kind : NodeKind
            `"leaf"`, `"introduce-vertex"`, `"introduce-edge"`, `"forget"` or `"join"`.

        bag : FrozenSet[int]
            The vertices of the bag.

        children : Tuple[int, ...]
            Ids of the child nodes.

        vertex : Optional[int]
            The introduced or forgotten vertex.

        edge : Optional[Tuple[int, int]]
            The introduced edge `(u, v)` with `u < v`.
    """
    id: int
    kind: NodeKind
    bag: FrozenSet[int]
    children: Tuple[int, ...] = ()
    vertex: Optional[int] = None
    edge: Optional[Tuple[int, int]] = None


class TreeDecomposition():
    r"""
    A rooted nice tree decomposition with introduce-edge nodes.

    Nodes are stored so that every child precedes its parent; the root is the last node and has an empty bag.
    """
    def __init__(self, nodes: Sequence[DecompositionNode], heuristic: str = ""):
        if not nodes:
            raise InputError("A Tree Decomposition Needs At Least One Node.")
        self.__nodes = tuple(nodes)
        self.__heuristic = heuristic
        parents: Dict[int, int] = {}
        for node in self.__nodes:
            for child in node.children:
                if child in parents:
                    raise InputError(f"Decomposition Node {child} Has More Than One Parent.")
                parents[child] = node.id
        self.__parents = parents

    @property
    def nodes(self) -> Tuple[DecompositionNode, ...]:
        return self.__nodes

    @property
    def root(self) -> int:
        return self.__nodes[-1].id

    @property
    def heuristic(self) -> str:
        return self.__heuristic

    @property
    def width(self) -> int:
        return max(len(node.bag) for node in self.__nodes) - 1

    def parent(self, node_id: int) -> Optional[int]:
        return self.__parents.get(node_id)

    def __len__(self) -> int:
        return len(self.__nodes)

    def validate(self, graph: Graph) -> None:
        r"""
        Check the structural and nice-form invariants against :param:`graph`.

        Raises
        -------
            InputError
                Naming the first violated invariant.
        """
        nodes = self.__nodes
        for idx, node in enumerate(nodes):
            if node.id != idx:
                raise InputError(f"Decomposition Node At Position {idx} Has Id {node.id}.")
            if node.kind not in NODE_KINDS:
                raise InputError(f"Decomposition Node {idx} Has Unknown Kind {node.kind!r}.")
            if any(not 0 <= child < idx for child in node.children):
                raise InputError(f"Decomposition Node {idx} Has A Child That Does Not Precede It.")
            if any(not 0 <= v < graph.n for v in node.bag):
                raise InputError(f"Decomposition Node {idx} Has A Bag Vertex Outside The Graph.")
            self.__check_kind(node)

        if self.parent(self.root) is not None or len(self.__parents) != len(nodes) - 1:
            raise InputError("Decomposition Is Not A Single Rooted Tree.")
        if nodes[-1].bag:
            raise InputError("Decomposition Root Bag Must Be Empty.")

        covered: Set[int] = set().union(*(node.bag for node in nodes))
        if covered != set(range(graph.n)):
            raise InputError(f"Vertices {sorted(set(range(graph.n)) - covered)} Appear In No Bag.")

        introduced = Counter(node.edge for node in nodes if node.kind == "introduce-edge")
        if set(introduced) != set(graph.edges) or any(count != 1 for count in introduced.values()):
            raise InputError("Every Graph Edge Must Be Introduced At Exactly One Introduce-Edge Node.")

        # occurrences form a connected subtree iff exactly one occurrence has no parent containing the vertex
        tops = Counter()
        for node in nodes:
            parent = self.parent(node.id)
            for v in node.bag:
                if parent is None or v not in nodes[parent].bag:
                    tops[v] += 1
        broken = sorted(v for v, count in tops.items() if count != 1)
        if broken:
            raise InputError(f"Occurrences Of Vertices {broken} Do Not Form Connected Subtrees.")

    def __check_kind(self, node: DecompositionNode):
        kids = [self.__nodes[child] for child in node.children]
        kind = node.kind
        if kind == "leaf":
            ok = not kids and not node.bag
        elif kind == "join":
            ok = len(kids) == 2 and all(kid.bag == node.bag for kid in kids)
        elif len(kids) != 1:
            ok = False
        elif kind == "introduce-vertex":
            ok = node.vertex not in kids[0].bag and node.bag == kids[0].bag | {node.vertex}
        elif kind == "forget":
            ok = node.vertex in kids[0].bag and node.bag == kids[0].bag - {node.vertex}
        else:
            ok = (
                node.edge is not None
                and node.bag == kids[0].bag
                and set(node.edge) <= node.bag
            )
        if not ok:
            raise InputError(f"Decomposition Node {node.id} Violates The {kind!r} Contract.")

    def dump(self) -> str:
        r"""
        Debug listing, one line per node: `id kind parent bag-members...` (parent `-1` for the root).
        """
        lines = []
        for node in self.__nodes:
            parent = self.parent(node.id)
            members = " ".join(str(v) for v in sorted(node.bag))
            lines.append(f"{node.id} {node.kind} {-1 if parent is None else parent} {members}".rstrip())
        return "\n".join(lines) + "\n"


class _NiceBuilder():
    r"""
    Appends nice-form nodes, introducing each graph edge right below the first forget of one of its endpoints.
    """
    def __init__(self, graph: Graph):
        self.nodes: List[DecompositionNode] = []
        self.__pending = set(graph.edges)

    def _add(self, kind: NodeKind, bag: FrozenSet[int], children: Tuple[int, ...] = (), **extra) -> int:
        node = DecompositionNode(len(self.nodes), kind, frozenset(bag), children, **extra)
        self.nodes.append(node)
        return node.id

    def leaf(self) -> int:
        return self._add("leaf", frozenset())

    def introduce(self, child: int, v: int) -> int:
        return self._add("introduce-vertex", self.nodes[child].bag | {v}, (child,), vertex=v)

    def forget(self, child: int, v: int) -> int:
        bag = self.nodes[child].bag
        for u in sorted(bag - {v}):
            edge = (u, v) if u < v else (v, u)
            if edge in self.__pending:
                self.__pending.discard(edge)
                child = self._add("introduce-edge", bag, (child,), edge=edge)
        return self._add("forget", bag - {v}, (child,), vertex=v)

    def join(self, left: int, right: int) -> int:
        return self._add("join", self.nodes[left].bag, (left, right))

    def morph(self, child: int, target: FrozenSet[int]) -> int:
        r"""
        Forget, then introduce, until the bag of the chain top equals :param:`target`.
        """
        bag = self.nodes[child].bag
        for v in sorted(bag - target):
            child = self.forget(child, v)
        for v in sorted(target - bag):
            child = self.introduce(child, v)
        return child

    @property
    def complete(self) -> bool:
        return not self.__pending


def nice_decomposition(graph: Graph, tree: nx.Graph, heuristic: str = "") -> TreeDecomposition:
    r"""
    Convert a tree of frozenset bags (as returned by the :mod:`networkx` treewidth heuristics) into nice form.

    Parameters
    ----------
        graph : Graph
            The decomposed graph.

        tree : nx.Graph
            A tree whose nodes are bags covering :param:`graph`.

        heuristic : str, default to `""`
            A tag recorded on the result.

    Returns
    -------
        TreeDecomposition
            The nice decomposition, rooted at an empty bag.
    """
    builder = _NiceBuilder(graph)
    bags = list(tree.nodes)
    if not bags:
        return TreeDecomposition([DecompositionNode(0, "leaf", frozenset())], heuristic)

    root_bag = bags[0]
    predecessors = nx.dfs_predecessors(tree, source=root_bag)
    children: Dict[FrozenSet[int], List[FrozenSet[int]]] = {bag: [] for bag in bags}
    for bag, parent in predecessors.items():
        children[parent].append(bag)

    built: Dict[FrozenSet[int], int] = {}
    for bag in nx.dfs_postorder_nodes(tree, source=root_bag):
        branches = [builder.morph(built.pop(child), frozenset(bag)) for child in children[bag]]
        if not branches:
            branches = [builder.morph(builder.leaf(), frozenset(bag))]
        top = branches[0]
        for other in branches[1:]:
            top = builder.join(top, other)
        built[bag] = top

    builder.morph(built[root_bag], frozenset())
    if not builder.complete:
        raise InputError("Bag Tree Does Not Cover Every Edge Of The Graph.")
    return TreeDecomposition(builder.nodes, heuristic)


def tree_decomposition_heuristic(graph: Graph) -> TreeDecomposition:
    r"""
    Heuristic nice tree decomposition.

    Runs the min-fill-in elimination ordering and falls back to the min-degree ordering when that one
    yields a strictly smaller width. The result is checked with :meth:`TreeDecomposition.validate()`.

    Parameters
    ----------
        graph : Graph
            The graph to be decomposed.

    Returns
    -------
        TreeDecomposition
            A valid nice decomposition; its width is heuristic, not necessarily the treewidth.
    """
    g = graph.to_networkx()
    fill_width, fill_tree = treewidth_min_fill_in(g)
    heuristic, tree = "min-fill", fill_tree
    if graph.n > 0:
        degree_width, degree_tree = treewidth_min_degree(g)
        if degree_width < fill_width:
            heuristic, tree = "min-degree", degree_tree
        _LOGGER.debug("tree decomposition: min-fill width %d, min-degree width %d", fill_width, degree_width)

    decomposition = nice_decomposition(graph, tree, heuristic)
    decomposition.validate(graph)
    return decomposition
