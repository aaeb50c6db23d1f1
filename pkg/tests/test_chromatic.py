from fractions import Fraction

import pytest
from hypothesis import given, settings

from pclsa.algebra import QPoly, Truncation
from pclsa.chromatic import (
    chromatic,
    count_colorings_bruteforce,
    marked_chromatic,
    marked_chromatic_brute,
    marked_chromatic_peo,
    marked_chromatic_via_partitions,
    ordinary_chromatic,
    partitions,
)
from pclsa.errors import EmptySupport, GuardExceeded, NotAPeo
from pclsa.graph import SimpleGraph, find_peo, induced_simple, make_graph
from pclsa.independence import indep_series

from conftest import graph_and_exponent, marked_graphs

ISO = make_graph(1, [], [1], [1])


def poly(*monomial):
    return QPoly.from_monomial(list(monomial))


def test_ordinary_chromatic_examples():
    assert ordinary_chromatic(SimpleGraph.from_edges(2, [(0, 1)])) == poly(0, -1, 1)
    assert ordinary_chromatic(SimpleGraph.complete(3)) == poly(0, 2, -3, 1)
    assert ordinary_chromatic(SimpleGraph.from_edges(3, [(0, 1), (1, 2)])) == poly(0, 1, -2, 1)


def test_ordinary_chromatic_four_cycle():
    c4 = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    # (q-1)^4 + (q-1)
    assert ordinary_chromatic(c4) == poly(0, -3, 6, -4, 1)


def test_partitions_reverse_lex():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_single_vertex_examples():
    assert marked_chromatic(make_graph(1), (2,)) == QPoly.binomial(2)
    iso = marked_chromatic(ISO, (2,))
    assert iso == poly(0, Fraction(1, 2), Fraction(1, 2))
    assert [iso(q) for q in (1, 2, 3)] == [1, 3, 6]
    assert marked_chromatic_peo(ISO, (2,)) == iso


def test_apex_edge_example(apex_edge):
    expected = poly(0, -1, 1) + poly(0, 2, -3, 1) / 2
    for engine in ("pk", "partitions", "peo", "brute"):
        p = chromatic(apex_edge, (2, 1), engine)
        assert p == expected
        assert p.coeff_of_q() == 0


def test_triangle_peo():
    k3 = make_graph(3, [(1, 2), (2, 3), (1, 3)])
    assert marked_chromatic_peo(k3, (1, 1, 1)) == poly(0, 2, -3, 1)


def test_isotropic_star_coeff(iso_path3):
    assert marked_chromatic_peo(iso_path3, (2, 2, 2)).coeff_of_q() == Fraction(-1, 2)


def test_bruteforce_examples(even_edge):
    assert count_colorings_bruteforce(ISO, (2,), 2) == 3
    assert count_colorings_bruteforce(even_edge, (1, 1), 2) == 2
    assert count_colorings_bruteforce(even_edge, (1, 1), 0) == 0


def test_bruteforce_guard():
    with pytest.raises(GuardExceeded):
        count_colorings_bruteforce(ISO, (2,), 50)


def test_empty_support():
    with pytest.raises(EmptySupport):
        marked_chromatic(ISO, (0,))


def test_peo_rejects_non_chordal():
    c4 = make_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    with pytest.raises(NotAPeo):
        marked_chromatic_peo(c4, (1, 1, 1, 1))
    with pytest.raises(NotAPeo):
        marked_chromatic_peo(make_graph(3, [(1, 2), (2, 3)]), (1, 1, 1), order=(0, 2, 1))


def test_unknown_engine():
    with pytest.raises(ValueError):
        chromatic(ISO, (1,), "magic")


@settings(max_examples=60, deadline=None)
@given(graph_and_exponent(max_height=5))
def test_engines_agree(case):
    g, m = case
    ref = marked_chromatic(g, m)
    assert marked_chromatic_via_partitions(g, m) == ref
    if find_peo(g, [i for i, v in enumerate(m) if v]) is not None:
        assert marked_chromatic_peo(g, m) == ref
    assert marked_chromatic_brute(g, m) == ref


@settings(max_examples=40, deadline=None)
@given(graph_and_exponent(max_height=4))
def test_power_series_identity(case):
    g, m = case
    s = indep_series(g, Truncation.box(m))
    p = marked_chromatic(g, m)
    for q in (-2, -1, 1, 2, 3):
        assert (s ** q)[m] == p(q)


@settings(max_examples=40)
@given(graph_and_exponent(max_height=5))
def test_shape(case):
    g, m = case
    p = marked_chromatic(g, m)
    assert p(0) == 0
    assert p.degree <= sum(m)


@given(marked_graphs(max_n=5))
def test_unmarked_ones_is_ordinary(g):
    plain = g.remarked((), ())
    for mask in range(1, 2 ** g.n):
        m = tuple(mask >> i & 1 for i in g.vertices)
        s = [i for i in g.vertices if m[i]]
        assert marked_chromatic(plain, m) == ordinary_chromatic(induced_simple(g, s))


def test_top_coefficient_when_fully_split():
    # an edgeless set of non-isotropic vertices splits into |m| singletons
    g = make_graph(3)
    p = marked_chromatic(g, (1, 1, 1))
    assert p == QPoly.from_monomial([0, 0, 0, 1])
    assert p.degree == 3
