"""Plumbing trees: definiteness, rationality, almost-rationality, file format."""

from fractions import Fraction

import pytest

from hfi.plumbing import (PlumbingGraph, canonical_K, chi, graph_from_text,
                          graph_to_text, intersection_form,
                          is_almost_rational, is_negative_definite,
                          is_rational, k_squared, minimal_cycle)


def e8_graph():
    # the -2 chain of length 7 with one extra leg at the fifth vertex
    verts = tuple((str(i), -2) for i in range(1, 9))
    edges = tuple((str(i), str(i + 1)) for i in range(1, 7)) + (("5", "8"),)
    return PlumbingGraph(verts, edges)


def test_tree_validation():
    with pytest.raises(ValueError):
        PlumbingGraph((("a", -2), ("a", -3)), ())  # duplicate id
    with pytest.raises(ValueError):
        PlumbingGraph((("a", -2), ("b", -2)), (("a", "c"),))  # unknown vertex
    with pytest.raises(ValueError):
        PlumbingGraph((("a", -2),), (("a", "a"),))  # self loop
    with pytest.raises(ValueError):
        PlumbingGraph((("a", -2), ("b", -2)), ())  # disconnected / wrong count


def test_intersection_form_and_K():
    g = PlumbingGraph((("a", -2), ("b", -3)), (("a", "b"),))
    assert intersection_form(g) == [[-2, 1], [1, -3]]
    assert canonical_K(g) == [0, 1]


def test_single_vertex():
    g = PlumbingGraph((("a", -1),), ())
    assert is_negative_definite(g)
    assert minimal_cycle(g) == [1]
    assert is_rational(g)
    assert k_squared(g) == -1


def test_not_negative_definite():
    g = PlumbingGraph((("a", 0),), ())
    assert not is_negative_definite(g)
    with pytest.raises(ValueError):
        minimal_cycle(g)
    with pytest.raises(ValueError):
        is_almost_rational(g)


def test_e8_frozen_values():
    g = e8_graph()
    m = intersection_form(g)
    assert is_negative_definite(g)
    # unimodular: determinant of the 8x8 form is 1
    from hfi.plumbing import _leading_minor_dets
    assert _leading_minor_dets(m)[-1] == 1
    assert canonical_K(g) == [0] * 8
    assert k_squared(g) == 0
    # coefficients of the highest root of the E8 lattice
    assert minimal_cycle(g) == [2, 3, 4, 5, 6, 4, 2, 3]
    assert chi(g, minimal_cycle(g)) == 1
    assert is_rational(g)
    assert is_almost_rational(g).verdict == "yes"


def test_minimal_cycle_is_antieffective():
    # every vertex pairs non-positively with the finished cycle
    g = e8_graph()
    z = minimal_cycle(g)
    m = intersection_form(g)
    for v in range(g.n):
        assert sum(m[v][j] * z[j] for j in range(g.n)) <= 0


def test_text_round_trip():
    g = e8_graph()
    assert graph_from_text(graph_to_text(g)) == g


def test_text_comments_and_errors():
    g = graph_from_text("""
    # a two-vertex chain
    vertex a -2
    vertex b -3   # trailing comment
    edge a b
    """)
    assert g.n == 2
    with pytest.raises(ValueError):
        graph_from_text("vertex a\n")
    with pytest.raises(ValueError):
        graph_from_text("polygon a b c\n")


def test_reweighted():
    g = PlumbingGraph((("a", -2),), ())
    assert g.reweighted("a", -5).weights() == [-5]
