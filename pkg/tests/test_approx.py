# tests/test_approx.py
from fractions import Fraction

import numpy as np
import pytest

from fcgp.core import (Graph, Instance, degree_ordering)
from fcgp.errors import (InputError, UnsupportedParameterError)
from fcgp.generators import gen_random_gnm
from fcgp.solvers import (
    candidate_set,
    candidate_set_size,
    check_general_range,
    check_topdegree_range,
    delta_threshold,
    fptas_general,
    fptas_topdegree,
    greedy_extremal_degree,
    solve_brute_force,
    solve_one_third
)

from conftest import (ALPHAS, random_instance, star)


def test_greedy_picks_extremal_degrees():
    graph = Graph(6, [(0, 1), (2, 3), (2, 4), (2, 5), (4, 5)])
    assert greedy_extremal_degree(Instance(graph, 2, "1/2", "max")).vertices == (2, 4)
    assert greedy_extremal_degree(Instance(graph, 2, "1/2", "min")).vertices == (0, 1)
    assert greedy_extremal_degree(Instance(star(4), 1, 1, "max")).vertices == (0,)


def test_greedy_additive_bound():
    rng = np.random.default_rng(7)
    for _ in range(300):
        instance = random_instance(rng)
        optimum = solve_brute_force(instance).value
        value = greedy_extremal_degree(instance).value
        slack = 2 * instance.k ** 2
        if instance.maximize:
            assert optimum - slack <= value <= optimum
        else:
            assert optimum <= value <= optimum + slack


@pytest.mark.parametrize("epsilon", [Fraction(1, 4), Fraction(1, 2)])
def test_fptas_general_guarantee(epsilon):
    rng = np.random.default_rng(int(epsilon.denominator))
    alphas = tuple(a for a in ALPHAS if a > 0 and a != Fraction(1, 3))
    for _ in range(200):
        instance = random_instance(rng, alphas=alphas)
        optimum = solve_brute_force(instance).value
        result = fptas_general(instance, epsilon)
        assert result.solution.verify(instance)
        if instance.maximize:
            assert result.guarantee == 1 - epsilon
            assert result.value >= (1 - epsilon) * optimum
        else:
            assert result.guarantee == 1 + epsilon
            assert result.value <= (1 + epsilon) * optimum


@pytest.mark.parametrize("leaves", [10, 100, 1000, 10000])
@pytest.mark.parametrize("alpha", [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)])
def test_fptas_general_on_stars(leaves, alpha):
    instance = Instance(star(leaves), 2, alpha, "max")
    epsilon = Fraction(1, 2)
    result = fptas_general(instance, epsilon)
    # the center with one leaf, or two leaves
    optimum = max((1 - alpha) + alpha * (leaves - 1), 2 * alpha)
    assert result.value == optimum
    assert result.delta_threshold == delta_threshold(2, epsilon, alpha)
    assert result.branch == ("greedy" if leaves > result.delta_threshold else "bounded-degree")


def test_fptas_general_parameters():
    instance = Instance(star(3), 1, 0, "max")
    with pytest.raises(UnsupportedParameterError):
        fptas_general(instance, "1/2")
    instance = Instance(star(3), 1, "1/2", "max")
    for bad in ("0", "3/2", "-1/2"):
        with pytest.raises(UnsupportedParameterError):
            fptas_general(instance, bad)
    assert fptas_general(instance, 1).value == Fraction(3, 2)


def test_delta_threshold_is_exact():
    assert delta_threshold(2, "1/2", Fraction(1, 2)) == 34
    assert delta_threshold(3, "1/3", Fraction(1, 3)) == 165
    with pytest.raises(UnsupportedParameterError):
        delta_threshold(2, "1/2", 0)


def test_fptas_general_min_keeps_greedy_on_ties():
    graph = Graph(4)
    result = fptas_general(Instance(graph, 2, "1/2", "min"), "1/2")
    assert result.branch == "greedy"
    assert result.solution.algorithm == "greedy"


def test_candidate_set():
    assert candidate_set_size(2, "1/2") == 34
    assert candidate_set_size(1, "2/3") == 1 + 9
    assert candidate_set_size(3, "3/4") == 3 + 22

    graph = gen_random_gnm(60, 200, 1)
    pool = candidate_set(graph, 2, "1/2")
    assert len(pool) == 34
    assert pool.vertices == degree_ordering(graph).prefix(34)

    small = candidate_set(graph, 3, "1/2", size=5)
    assert small.vertices == degree_ordering(graph).prefix(5)
    with pytest.raises(InputError):
        candidate_set(graph, 3, "1/2", size=2)


def test_fptas_topdegree_guarantee():
    rng = np.random.default_rng(99)
    epsilon = Fraction(1, 2)
    alphas = (Fraction(1, 3), Fraction(1, 2), Fraction(1))
    for _ in range(200):
        instance = random_instance(rng, alphas=alphas, direction="max")
        optimum = solve_brute_force(instance).value
        result = fptas_topdegree(instance, epsilon)
        assert result.branch == "candidate-enum"
        assert result.value >= (1 - epsilon) * optimum
        pool = set(candidate_set(instance.graph, instance.k, epsilon).vertices)
        assert set(result.solution.vertices) <= pool


def test_fptas_topdegree_parameters():
    graph = gen_random_gnm(8, 12, 3)
    with pytest.raises(UnsupportedParameterError, match="1/3"):
        fptas_topdegree(Instance(graph, 2, "1/4", "max"), "1/2")
    with pytest.raises(UnsupportedParameterError):
        fptas_topdegree(Instance(graph, 2, "1/2", "min"), "1/2")
    with pytest.raises(UnsupportedParameterError):
        fptas_topdegree(Instance(graph, 2, "1/2", "max"), 1)


def test_one_third_closed_form():
    rng = np.random.default_rng(3)
    third = (Fraction(1, 3),)
    for _ in range(100):
        instance = random_instance(rng, alphas=third)
        result = solve_one_third(instance)
        assert result.value == solve_brute_force(instance).value
        assert result.value == Fraction(sum(instance.graph.degree(v) for v in result.vertices), 3)
    with pytest.raises(UnsupportedParameterError):
        solve_one_third(Instance(star(3), 1, "1/2"))


def test_range_checks():
    graph = gen_random_gnm(6, 8, 2)
    check_general_range(Instance(graph, 2, "1/4", "min"))
    check_topdegree_range(Instance(graph, 2, "1/3", "max"))
    with pytest.raises(UnsupportedParameterError):
        check_general_range(Instance(graph, 2, 0, "max"))
    with pytest.raises(UnsupportedParameterError, match="1/3"):
        check_topdegree_range(Instance(graph, 2, "1/4", "max"))
    with pytest.raises(UnsupportedParameterError):
        check_topdegree_range(Instance(graph, 2, "1", "min"))
