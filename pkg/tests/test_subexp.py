# tests/test_subexp.py
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
import networkx as nx

from fcgp.core import (Graph, Instance, cov_alpha, objective_ordering)
from fcgp.errors import (GateExhaustedError, InputError, ResourceLimitError, UnsupportedParameterError)
from fcgp.generators import (gen_grid, gen_random_gnm, gen_regular)
from fcgp.solvers import (greedy_extremal_degree, solve_brute_force)
from fcgp.subexp import (
    PrefixSubproblem,
    build_prefix_subproblem,
    check_exchange_lemma,
    dp_solve_prefix,
    greedy_dominating_set,
    has_dominating_set,
    solve_subexponential,
    tree_decomposition_heuristic,
    weighted_objective
)

from conftest import (random_instance, star)


MAX_ALPHAS = (Fraction(1, 3), Fraction(1, 2), Fraction(1))
MIN_ALPHAS = (Fraction(0), Fraction(1, 6), Fraction(1, 3))


def lemma_instance(rng, max_n=12, max_k=4):
    if rng.integers(2) == 0:
        return random_instance(rng, max_n, max_k, alphas=MAX_ALPHAS, direction="max")
    return random_instance(rng, max_n, max_k, alphas=MIN_ALPHAS, direction="min")


def weighted_oracle(subproblem, k, alpha, direction, forced=None):
    values = [
        weighted_objective(subproblem, chosen, alpha)
        for chosen in combinations(subproblem.vertices, k)
        if forced is None or forced in chosen
    ]
    return max(values) if direction == "max" else min(values)


def test_greedy_dominating_set():
    assert greedy_dominating_set(star(6)) == (0,)
    assert greedy_dominating_set(Graph(4)) == (0, 1, 2, 3)
    assert greedy_dominating_set(gen_grid(3, 3)) == (1, 4, 7)


def test_has_dominating_set():
    grid = gen_grid(3, 3)
    assert has_dominating_set(grid, 3)
    assert not has_dominating_set(grid, 2)
    assert has_dominating_set(star(9), 1)
    assert not has_dominating_set(Graph(3), 2)
    with pytest.raises(ResourceLimitError):
        has_dominating_set(grid, 2, limit=1)


@pytest.mark.parametrize(
    "graph, width",
    [
        (Graph.from_networkx(nx.balanced_tree(2, 3)), 1),
        (Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]), 1),
        *[(Graph.from_networkx(nx.cycle_graph(n)), 2) for n in range(4, 10)],
        *[(Graph.from_networkx(nx.complete_graph(r)), r - 1) for r in range(2, 7)],
        (Graph(1), 0),
    ]
)
def test_decomposition_widths(graph, width):
    decomposition = tree_decomposition_heuristic(graph)
    assert decomposition.width == width
    decomposition.validate(graph)


def test_decompositions_are_valid():
    rng = np.random.default_rng(8)
    for _ in range(60):
        n = int(rng.integers(0, 14))
        graph = gen_random_gnm(n, int(rng.integers(0, n * (n - 1) // 2 + 1)), int(rng.integers(1000)))
        decomposition = tree_decomposition_heuristic(graph)
        decomposition.validate(graph)
        root = decomposition.nodes[-1]
        assert decomposition.root == root.id and not root.bag
        assert sum(node.kind == "introduce-edge" for node in decomposition.nodes) == graph.m
        assert all(child < node.id for node in decomposition.nodes for child in node.children)


def test_validate_rejects_foreign_graph():
    path = Graph(3, [(0, 1), (1, 2)])
    decomposition = tree_decomposition_heuristic(path)
    with pytest.raises(InputError):
        decomposition.validate(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(InputError):
        decomposition.validate(Graph(4, [(0, 1), (1, 2)]))


def test_decomposition_dump():
    dump = tree_decomposition_heuristic(Graph(1)).dump()
    assert dump == "0 leaf 1\n1 introduce-vertex 2 0\n2 forget -1\n"


def test_prefix_subproblem_weights():
    graph = gen_random_gnm(12, 30, 4)
    ordering = objective_ordering(graph, "max")
    for j in range(1, graph.n + 1):
        subproblem = build_prefix_subproblem(graph, ordering, j)
        assert subproblem.vertices == ordering.prefix(j)
        for i, v in enumerate(subproblem.vertices):
            assert subproblem.omega[i] + subproblem.prefix_graph.degree(i) == graph.degree(v)
        assert subproblem.boundary_weight == dict(zip(subproblem.vertices, subproblem.omega))


def test_weighted_objective_identity():
    rng = np.random.default_rng(21)
    for _ in range(40):
        instance = random_instance(rng, max_n=11)
        graph = instance.graph
        ordering = objective_ordering(graph, instance.direction)
        j = int(rng.integers(1, graph.n + 1))
        subproblem = build_prefix_subproblem(graph, ordering, j)
        for size in range(0, min(j, 3) + 1):
            for chosen in combinations(subproblem.vertices, size):
                assert weighted_objective(subproblem, chosen, instance.alpha) == cov_alpha(graph, chosen, instance.alpha)


def test_dp_equals_brute_force_without_weights():
    rng = np.random.default_rng(13)
    for _ in range(30):
        instance = random_instance(rng, max_n=10)
        graph = instance.graph
        subproblem = PrefixSubproblem(graph.n, graph, tuple(range(graph.n)), (0,) * graph.n)
        decomposition = tree_decomposition_heuristic(graph)
        solution = dp_solve_prefix(subproblem, decomposition, instance.k, instance.alpha, instance.direction)
        assert solution.value == solve_brute_force(instance).value
        assert solution.value == cov_alpha(graph, solution.vertices, instance.alpha)
        assert len(solution.vertices) == instance.k


def test_dp_equals_weighted_oracle_on_prefixes():
    rng = np.random.default_rng(17)
    graphs = []
    for _ in range(20):
        rows = int(rng.integers(1, 5))
        graphs.append(gen_grid(rows, int(rng.integers(1, 5))))
    for _ in range(20):
        n = int(rng.integers(2, 15))
        graphs.append(gen_random_gnm(n, int(rng.integers(0, min(n * (n - 1) // 2, 2 * n) + 1)), int(rng.integers(1000))))

    for graph in graphs:
        alpha = Fraction(int(rng.integers(0, 7)), 6)
        direction = "max" if rng.integers(2) == 0 else "min"
        ordering = objective_ordering(graph, direction)
        for j in range(1, min(graph.n, 14) + 1):
            k = int(rng.integers(1, min(4, j) + 1))
            subproblem = build_prefix_subproblem(graph, ordering, j)
            decomposition = tree_decomposition_heuristic(subproblem.prefix_graph)
            solution = dp_solve_prefix(subproblem, decomposition, k, alpha, direction)
            assert solution.value == weighted_oracle(subproblem, k, alpha, direction)
            assert solution.value == weighted_objective(subproblem, solution.vertices, alpha)

            forced = ordering.permutation[j - 1]
            pinned = dp_solve_prefix(subproblem, decomposition, k, alpha, direction, forced=forced)
            assert forced in pinned.vertices
            assert pinned.value == weighted_oracle(subproblem, k, alpha, direction, forced)


def test_dp_with_arbitrary_weights():
    rng = np.random.default_rng(5)
    for _ in range(30):
        n = int(rng.integers(1, 10))
        graph = gen_random_gnm(n, int(rng.integers(0, n * (n - 1) // 2 + 1)), int(rng.integers(1000)))
        omega = tuple(int(w) for w in rng.integers(0, 6, size=n))
        subproblem = PrefixSubproblem(n, graph, tuple(range(n)), omega)
        k = int(rng.integers(1, min(4, n) + 1))
        alpha = Fraction(int(rng.integers(0, 5)), 4)
        for direction in ("max", "min"):
            solution = dp_solve_prefix(subproblem, tree_decomposition_heuristic(graph), k, alpha, direction)
            assert solution.value == weighted_oracle(subproblem, k, alpha, direction)


def test_dp_errors():
    graph = gen_grid(2, 3)
    subproblem = PrefixSubproblem(6, graph, tuple(range(6)), (0,) * 6)
    decomposition = tree_decomposition_heuristic(graph)
    with pytest.raises(InputError):
        dp_solve_prefix(subproblem, decomposition, 7, "1/2", "max")
    with pytest.raises(InputError):
        dp_solve_prefix(subproblem, tree_decomposition_heuristic(gen_grid(3, 2)), 2, "1/2", "max")
    with pytest.raises(InputError):
        PrefixSubproblem(6, graph, tuple(range(6)), (0,) * 5)


def test_exchange_lemma_random():
    rng = np.random.default_rng(31)
    for _ in range(300):
        instance = lemma_instance(rng)
        witness = check_exchange_lemma(instance)
        assert witness.dominated
        assert witness.solution.value == solve_brute_force(instance).value
        positions = sorted(witness.order.position(v) for v in witness.solution.vertices)
        assert witness.j == positions[-1] + 1


def test_exchange_lemma_examples():
    witness = check_exchange_lemma(Instance(star(5), 1, "1/2", "max"))
    assert witness.solution.vertices == (0,)
    assert witness.j == 1 and witness.dominated

    regular = gen_regular(10, 3, 1)
    witness = check_exchange_lemma(Instance(regular, 3, "1/3", "max"))
    assert set(witness.solution.vertices) == set(witness.order.prefix(3))
    assert witness.dominated

    with pytest.raises(UnsupportedParameterError):
        check_exchange_lemma(Instance(star(5), 1, "1/4", "max"))
    with pytest.raises(UnsupportedParameterError):
        check_exchange_lemma(Instance(star(5), 1, "1/2", "min"))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("alpha, direction", [(Fraction(1, 2), "max"), (Fraction(1, 6), "min")])
def test_subexponential_on_grid(k, alpha, direction):
    instance = Instance(gen_grid(4, 4), k, alpha, direction)
    result = solve_subexponential(instance)
    assert result.method == "subexponential"
    assert result.value == solve_brute_force(instance).value
    assert result.solution.verify(instance)


def test_subexponential_random_sparse():
    rng = np.random.default_rng(41)
    for _ in range(40):
        n = int(rng.integers(1, 13))
        graph = gen_random_gnm(n, int(rng.integers(0, min(n * (n - 1) // 2, 3 * n // 2) + 1)), int(rng.integers(1000)))
        k = int(rng.integers(1, min(4, n) + 1))
        if rng.integers(2) == 0:
            instance = Instance(graph, k, MAX_ALPHAS[int(rng.integers(3))], "max")
        else:
            instance = Instance(graph, k, MIN_ALPHAS[int(rng.integers(3))], "min")
        result = solve_subexponential(instance, width_budget=graph.n)
        assert result.value == solve_brute_force(instance).value
        greedy = greedy_extremal_degree(instance).value
        assert not instance.better(greedy, result.value)


def test_subexponential_examples():
    regular = gen_regular(10, 3, 2)
    assert solve_subexponential(Instance(regular, 3, "1/3", "max")).value == 3

    center = solve_subexponential(Instance(star(7), 1, "1/2", "max"))
    assert center.vertices == (0,)
    assert center.value == Fraction(7, 2)

    assert solve_subexponential(Instance(gen_grid(3, 3), 2, "1/2", "max"), workers=2) == \
        solve_subexponential(Instance(gen_grid(3, 3), 2, "1/2", "max"), workers=1)


def test_subexponential_errors():
    with pytest.raises(UnsupportedParameterError):
        solve_subexponential(Instance(star(4), 1, "1/4", "max"))
    with pytest.raises(UnsupportedParameterError):
        solve_subexponential(Instance(star(4), 1, "1/2", "min"))

    clique = Graph.from_networkx(nx.complete_graph(4))
    with pytest.raises(GateExhaustedError):
        solve_subexponential(Instance(clique, 2, "1/2", "max"), width_budget=0)
