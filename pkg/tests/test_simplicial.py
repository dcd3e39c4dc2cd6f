from math import comb

import pytest
from hypothesis import given

from conftest import graphs
from oracles import brute_chi, brute_cliques, brute_fvector
from shannon_curvature import (
    BudgetExceeded,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_cliques,
    euler_characteristic,
    f_vector,
    generating_function,
    generating_function_recursive,
    random_graph,
    star_graph,
    strong_product,
    zykov_join,
)
from shannon_curvature import polynomial as P
from shannon_curvature.corpus import graph_corpus
from shannon_curvature.simplicial import maximal_cliques

K4_STAR4 = (20, 94, 212, 277, 224, 112, 32, 4)


def test_k3_cliques():
    assert enumerate_cliques(complete_graph(3)) == [
        [(0,), (1,), (2,)],
        [(0, 1), (0, 2), (1, 2)],
        [(0, 1, 2)],
    ]


def test_small_fvectors():
    assert f_vector(cycle_graph(4)) == (4, 4)
    assert f_vector(complete_graph(4)) == (4, 6, 4, 1)
    assert f_vector(star_graph(4)) == (5, 4)
    assert f_vector(empty_graph()) == ()


@pytest.mark.parametrize("method", ["count", "enumerate"])
def test_k4_star4_fvector(method):
    g = strong_product(complete_graph(4), star_graph(4))
    assert f_vector(g, method) == K4_STAR4
    assert euler_characteristic(g) == 1


def test_generating_functions():
    assert generating_function(complete_graph(2)) == (1, 2, 1)
    assert generating_function(complete_graph(4)) == (1, 4, 6, 4, 1)
    assert generating_function(cycle_graph(4)) == (1, 4, 4)


@pytest.mark.parametrize("n", range(0, 7))
def test_edgeless_recursion_base_case(n):
    assert generating_function_recursive(empty_graph(n)) == ((1, n) if n else (1,))


def test_recursion_on_k4():
    assert generating_function_recursive(complete_graph(4)) == (1, 4, 6, 4, 1)


def test_recursion_matches_enumeration_on_corpus():
    for g in graph_corpus(50, seed=11):
        assert generating_function_recursive(g) == generating_function(g, "enumerate")


@given(graphs(7))
def test_three_routes_agree_with_brute_force(g):
    brute = brute_fvector(g)
    assert f_vector(g, "count") == brute
    assert f_vector(g, "enumerate") == brute
    assert generating_function_recursive(g) == (1,) + brute
    assert euler_characteristic(g) == brute_chi(g)


@given(graphs(7))
def test_enumeration_lists_each_clique_once(g):
    listed = enumerate_cliques(g)
    assert [sorted(level) for level in listed] == [sorted(level) for level in brute_cliques(g)]
    for level in listed:
        assert level == sorted(level)
        assert len(set(level)) == len(level)


@given(graphs(7))
def test_maximal_cliques_are_maximal(g):
    mcs = maximal_cliques(g)
    sets = [set(m) for m in mcs]
    for s in sets:
        assert not any(s < t for t in sets)
    covered = {(v,) for m in mcs for v in m}
    assert len(covered) == len(g)


@given(graphs(7))
def test_chi_is_one_minus_f_at_minus_one(g):
    assert euler_characteristic(g) == 1 - P.evaluate(generating_function(g), -1)


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_graph_binomials(n):
    assert f_vector(complete_graph(n)) == tuple(comb(n, k + 1) for k in range(n))


@given(graphs(5), graphs(5))
def test_join_multiplies_generating_functions(g, h):
    j = zykov_join(g, h)
    assert generating_function(j) == tuple(P.mul(generating_function(g), generating_function(h)))
    assert 1 - euler_characteristic(j) == (1 - euler_characteristic(g)) * (1 - euler_characteristic(h))


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        enumerate_cliques(complete_graph(12), budget=1000)
    with pytest.raises(BudgetExceeded):
        f_vector(random_graph(9, 20, 1), "enumerate", budget=10)


def test_truncated_enumeration():
    assert f_vector(complete_graph(6), "enumerate", max_dim=1) == (6, 15)
    assert f_vector(complete_graph(6), max_dim=2) == (6, 15, 20)
