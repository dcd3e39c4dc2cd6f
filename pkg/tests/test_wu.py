from fractions import Fraction

import pytest
from hypothesis import given

from conftest import graphs
from oracles import brute_wu, brute_wu_curvature
from shannon_curvature import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    octahedron,
    star_graph,
    strong_product,
    wu_characteristic,
    wu_curvature,
    wu_curvatures,
    wu_product_survey,
)
from shannon_curvature.corpus import pair_corpus
from shannon_curvature.wu import wu_report


def test_small_values():
    # K2: three simplices, seven intersecting ordered pairs
    assert brute_wu(complete_graph(2)) == -1
    assert wu_characteristic(complete_graph(1)) == 1
    assert wu_characteristic(complete_graph(2)) == -1
    assert wu_characteristic(complete_graph(3)) == 1
    assert wu_curvature(complete_graph(1), 0) == 1
    assert wu_curvatures(complete_graph(2)) == {0: Fraction(-1, 2), 1: Fraction(-1, 2)}


@pytest.mark.parametrize("n", range(1, 6))
def test_complete_graphs(n):
    assert brute_wu(complete_graph(n)) == (-1) ** (n - 1)
    assert wu_characteristic(complete_graph(n)) == (-1) ** (n - 1)


def test_closed_surface_equals_chi():
    assert wu_characteristic(octahedron()) == 2
    assert wu_characteristic(cycle_graph(6)) == 0


@given(graphs(6))
def test_matches_pair_loop_oracle(g):
    assert wu_characteristic(g) == brute_wu(g)
    assert wu_curvatures(g) == brute_wu_curvature(g)


@given(graphs(6))
def test_curvature_conserves_total(g):
    assert wu_report(g).sum_equals_wu


@given(graphs(4), graphs(4))
def test_additive_over_union(g, h):
    assert wu_characteristic(disjoint_union(g, h)) == wu_characteristic(g) + wu_characteristic(h)


def test_survey_trivial_pair():
    s = wu_product_survey(complete_graph(1), complete_graph(1))
    assert s.differences == [] and s.wu_multiplicative


def test_survey_k2_star2_finds_witness():
    s = wu_product_survey(complete_graph(2), star_graph(2))
    assert s.vertices == 6 and s.differences
    g, h = complete_graph(2), star_graph(2)
    kgh, kg, kh = wu_curvatures(strong_product(g, h)), wu_curvatures(g), wu_curvatures(h)
    for (x, y), left, right in s.differences:
        assert left == kgh[(x, y)] and right == kg[x] * kh[y] and left != right


def test_survey_k2_k2():
    # K2*K2 = K4 has Wu curvature -1/4 everywhere, but (-1/2)^2 = 1/4
    s = wu_product_survey(complete_graph(2), complete_graph(2))
    assert len(s.differences) == 4
    assert all(d[1] == Fraction(-1, 4) and d[2] == Fraction(1, 4) for d in s.differences)


def test_survey_over_corpus_finds_failures():
    found = 0
    for g, h in pair_corpus(30, seed=41, g_limits=(4, 5), h_limits=(3, 3)):
        found += bool(wu_product_survey(g, h).differences)
    assert found > 0
