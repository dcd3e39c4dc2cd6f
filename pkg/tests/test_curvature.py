from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import handshake_curvature
from shannon_curvature import (
    complete_graph,
    curvature,
    curvatures,
    cycle_graph,
    cylinder_decomposition_check,
    disjoint_union,
    empty_graph,
    euler_characteristic,
    gauss_bonnet_report,
    octahedron,
    sphere_join_homotopy_check,
    star_graph,
    strong_product,
    verify_curvature_product,
)
from shannon_curvature.corpus import pair_corpus
from shannon_curvature.curvature import sphere_index_product


@pytest.mark.parametrize("n", range(1, 8))
def test_complete_graph_curvature(n):
    assert curvature(complete_graph(n), 0) == Fraction(1, n)


@pytest.mark.parametrize("n", range(4, 9))
def test_cycle_curvature_vanishes(n):
    assert set(curvatures(cycle_graph(n)).values()) == {0}


def test_star_and_k4_and_octahedron():
    k = curvatures(star_graph(4))
    assert k[0] == -1 and all(k[i] == Fraction(1, 2) for i in range(1, 5))
    assert list(curvatures(complete_graph(4)).values()) == [Fraction(1, 4)] * 4
    # frozen from the handshake oracle on the constructed octahedron
    assert list(curvatures(octahedron()).values()) == [Fraction(1, 3)] * 6


@given(graphs(7))
def test_curvature_matches_handshake_oracle(g):
    assert curvatures(g) == handshake_curvature(g)


@given(graphs(8))
def test_gauss_bonnet(g):
    rep = gauss_bonnet_report(g)
    assert rep.equal and rep.chi == euler_characteristic(g)


def test_gauss_bonnet_examples():
    rep = gauss_bonnet_report(complete_graph(4))
    assert (rep.sum, rep.chi, rep.equal) == (1, 1, True)
    rep = gauss_bonnet_report(cycle_graph(4))
    assert (rep.sum, rep.chi, rep.equal) == (0, 0, True)


def test_isolated_vertex_and_union_locality():
    assert curvature(empty_graph(3), 1) == 1
    g, h = cycle_graph(5), star_graph(3)
    u = curvatures(disjoint_union(g, h))
    kg, kh = curvatures(g), curvatures(h)
    assert all(u[(0, v)] == kg[v] for v in g.vertices)
    assert all(u[(1, v)] == kh[v] for v in h.vertices)


def test_product_curvature_k4_star():
    g, h = complete_graph(4), star_graph(4)
    rep = verify_curvature_product(g, h)
    assert rep.ok
    k = curvatures(strong_product(g, h))
    assert all(k[(x, 0)] == Fraction(-1, 4) for x in g.vertices)


def test_product_with_k1_keeps_curvature():
    h = star_graph(3)
    rep = verify_curvature_product(complete_graph(1), h)
    kh = curvatures(h)
    assert rep.ok and [r[1] for r in rep.rows] == [kh[v] for v in h.vertices]


@given(graphs(5), graphs(5))
def test_theorem_on_random_pairs(g, h):
    assert verify_curvature_product(g, h).ok


def test_cylinder_c4_k2():
    g, h = cycle_graph(4), complete_graph(2)
    for x in g.vertices:
        for y in h.vertices:
            rep = cylinder_decomposition_check(g, h, x, y)
            assert rep.ok and rep.sphere_size == 5


def test_cylinder_k1_degenerate():
    g, h = complete_graph(1), cycle_graph(5)
    rep = cylinder_decomposition_check(g, h, 0, 2)
    assert rep.ok and rep.sphere_size == 2


def test_cylinder_and_join_on_corpus():
    for g, h in pair_corpus(25, seed=12):
        gh = strong_product(g, h)
        for x in g.vertices:
            for y in h.vertices:
                assert cylinder_decomposition_check(g, h, x, y, gh).ok
                assert sphere_join_homotopy_check(g, h, x, y, gh).ok
                left, right = sphere_index_product(g, h, x, y, gh)
                assert left == right


def test_sphere_join_octahedron_case():
    g, h = cycle_graph(4), complete_graph(2)
    rep = sphere_join_homotopy_check(g, h, 0, 0)
    # S(x) is two points and S(y) one point: the join is a path, contractible
    assert rep.ok and rep.chi == (1, 1)


def test_sphere_join_isolated_vertex():
    g, h = empty_graph(1), cycle_graph(4)
    rep = sphere_join_homotopy_check(g, h, 0, 0)
    # S(x) is empty, so the join is S(y): two points
    assert rep.ok and rep.chi == (2, 2)


@given(graphs(4), graphs(4), st.data())
def test_sphere_join_property(g, h, data):
    if not len(g) or not len(h):
        return
    x = data.draw(st.sampled_from(g.vertices))
    y = data.draw(st.sampled_from(h.vertices))
    assert sphere_join_homotopy_check(g, h, x, y).ok
