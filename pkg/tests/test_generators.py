# tests/test_generators.py
from collections import Counter
from fractions import Fraction
from math import comb

import pytest
import networkx as nx

from fcgp.config import set_settings
from fcgp.core import (Graph, cov_alpha, format_edge_list, parse_edge_list)
from fcgp.errors import (InputError, ResourceLimitError)
from fcgp.generators import (
    GapInstanceSpec,
    gap_report,
    gen_gap_instance,
    gen_grid,
    gen_random_gnm,
    gen_regular,
    generate
)
from fcgp.solvers import (candidate_set, solve_brute_force)


def test_gnm():
    assert gen_random_gnm(5, 10, 0) == Graph.from_networkx(nx.complete_graph(5))
    assert gen_random_gnm(5, 0, 0).m == 0
    assert gen_random_gnm(0, 0, 0).n == 0
    for seed in range(10):
        graph = gen_random_gnm(12, 20, seed)
        assert graph.n == 12 and graph.m == 20
        assert format_edge_list(graph) == format_edge_list(gen_random_gnm(12, 20, seed))
        assert parse_edge_list(format_edge_list(graph)) == graph
    assert gen_random_gnm(12, 20, 1) != gen_random_gnm(12, 20, 2)
    with pytest.raises(InputError):
        gen_random_gnm(5, 11, 0)
    with pytest.raises(InputError):
        gen_random_gnm(5, -1, 0)


def test_grid():
    assert gen_grid(1, 1) == Graph(1)
    assert gen_grid(2, 2) == Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    for rows, cols in ((2, 3), (3, 5), (4, 4), (1, 6)):
        graph = gen_grid(rows, cols)
        assert graph.n == rows * cols
        assert graph.m == rows * (cols - 1) + cols * (rows - 1)
    # row-major ids
    assert gen_grid(2, 3).neighbors(0) == frozenset({1, 3})
    with pytest.raises(InputError):
        gen_grid(0, 3)


def test_regular():
    assert gen_regular(4, 3, 0) == Graph.from_networkx(nx.complete_graph(4))

    cycles = gen_regular(6, 2, 5)
    g = cycles.to_networkx()
    assert all(d == 2 for _, d in g.degree())
    for component in nx.connected_components(g):
        sub = g.subgraph(component)
        assert sub.number_of_edges() == sub.number_of_nodes() >= 3

    for n, d, seed in ((10, 3, 1), (12, 4, 2), (9, 2, 3), (8, 0, 4)):
        graph = gen_regular(n, d, seed)
        assert set(graph.degrees) == {d}
        assert graph == gen_regular(n, d, seed)


def test_regular_errors(monkeypatch):
    with pytest.raises(InputError):
        gen_regular(5, 3, 0)
    with pytest.raises(InputError):
        gen_regular(4, 4, 0)

    from fcgp.generators import _random
    monkeypatch.setattr(_random, "_pair_points", lambda rng, n, d: None)
    set_settings(regular_attempts=3)
    with pytest.raises(ResourceLimitError):
        gen_regular(10, 3, 0)


def test_gap_smallest():
    instance = gen_gap_instance(GapInstanceSpec(2, 1, Fraction(1, 6)))
    assert instance.graph.n == 5
    assert instance.graph.degrees == (2, 1, 1, 1, 1)
    assert instance.direction == "max"
    assert instance.alpha.value == Fraction(1, 6)


@pytest.mark.parametrize("k, N", [(2, 3), (4, 3), (5, 5), (6, 9)])
def test_gap_structure(k, N):
    spec = GapInstanceSpec(k, N, "1/6")
    graph = gen_gap_instance(spec).graph
    assert graph.n == N + k * N + k == spec.n
    assert Counter(graph.degrees) == Counter({k: N}) + Counter({k - 1: k}) + Counter({1: k * N})
    assert all(graph.degree(h) == k for h in spec.hubs)
    assert all(graph.degree(v) == k - 1 for v in spec.clique)


@pytest.mark.parametrize("mu", [Fraction(1, 10), Fraction(1, 6)])
def test_gap_closed_forms(mu):
    k = 30
    spec = GapInstanceSpec(k, k, mu)
    instance = gen_gap_instance(spec)
    report = gap_report(spec)
    alpha = Fraction(1, 3) - mu

    assert report.alpha == alpha
    assert report.hub_value == alpha * k * k == cov_alpha(instance.graph, spec.hubs[:k], alpha)
    assert report.clique_value == (1 - alpha) * comb(k, 2) == cov_alpha(instance.graph, spec.clique, alpha)
    assert report.ratio == 2 * alpha * k / ((1 - alpha) * (k - 1))
    assert report.limit_bound == (Fraction(1, 3) - mu) / (Fraction(1, 3) + mu / 2)

    assert report.tight and report.below_one_minus_3mu
    assert report.ratio < 1 - 3 * mu
    assert report.ratio < 1 - 3 * mu + Fraction(1, 100)
    assert report.ratio < report.limit_bound + Fraction(1, 20)

    top = candidate_set(instance.graph, k, "1/2", size=spec.N)
    assert set(top.vertices) == set(spec.hubs)


def test_gap_ratio_at_thirty():
    report = gap_report(GapInstanceSpec(30, 30, Fraction(1, 10)))
    assert report.ratio == Fraction(420, 667)


def test_gap_small_k_is_not_tight():
    report = gap_report(GapInstanceSpec(4, 4, Fraction(1, 10)))
    assert not report.tight
    assert report.below_one_minus_3mu is False
    assert gap_report(GapInstanceSpec(4, 3, Fraction(1, 10))).ratio is None


def test_gap_against_oracle():
    spec = GapInstanceSpec(4, 4, Fraction(1, 6))
    instance = gen_gap_instance(spec)
    report = gap_report(spec)
    optimum = solve_brute_force(instance).value
    assert optimum >= report.clique_value > report.hub_value
    top = candidate_set(instance.graph, 4, "1/2", size=spec.N)
    assert solve_brute_force(instance, candidates=top.vertices).value == report.hub_value


def test_gap_spec_errors():
    with pytest.raises(InputError):
        GapInstanceSpec(1, 3, "1/6")
    with pytest.raises(InputError):
        GapInstanceSpec(3, 0, "1/6")
    with pytest.raises(InputError):
        GapInstanceSpec(3, 3, 0)
    with pytest.raises(InputError):
        GapInstanceSpec(3, 3, "1/2")


def test_generate_dispatch():
    graph, meta = generate("gap", {"k": 4, "N": 3, "mu": Fraction(1, 6)})
    assert graph.n == 19
    assert meta == {"family": "gap", "params": {"k": 4, "N": 3, "mu": "1/6"}, "seed": None, "n": 19, "m": 18}

    graph, meta = generate("gnm", {"n": 7, "m": 9}, seed=3)
    assert graph == gen_random_gnm(7, 9, 3)
    assert meta["seed"] == 3 and meta["m"] == 9

    with pytest.raises(InputError):
        generate("tree", {})
    with pytest.raises(InputError):
        generate("grid", {"rows": 2})
    with pytest.raises(InputError):
        generate("grid", {"rows": 2, "cols": 2, "d": 1})
