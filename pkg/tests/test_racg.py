import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pclsa.algebra import Truncation
from pclsa.corpus import CORPUS
from pclsa.errors import GuardExceeded, NotAPeo
from pclsa.graph import SimpleGraph, find_peo
from pclsa.racg import (
    coxeter_normal_form,
    coxeter_reduce,
    poincare,
    poincare_by_substitution,
    racg_bfs,
    racg_elements,
    racg_growth_closed,
    racg_growth_peo,
)
from pclsa.traces import ug_hilbert

from conftest import marked_graphs

EDGE = SimpleGraph.from_edges(2, [(0, 1)])
PAIR = SimpleGraph(2, frozenset())
POINT = SimpleGraph(1, frozenset())


def test_reduce_cancels_through_commuting_letters():
    assert coxeter_reduce(PAIR, (0, 1, 0)) == (1,)
    assert coxeter_reduce(EDGE, (0, 1, 0)) == (0, 1, 0)
    assert coxeter_reduce(EDGE, (0, 1, 1, 0)) == ()


def test_normal_form_lex_least():
    assert coxeter_normal_form(PAIR, (1, 0)) == (0, 1)
    assert coxeter_normal_form(EDGE, (1, 0)) == (1, 0)


def test_closed_examples():
    assert racg_growth_closed(PAIR, 4).sorted_items() == [((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)]
    assert racg_growth_closed(EDGE, 4)[(1, 1)] == 2
    assert racg_growth_closed(POINT, 4).sorted_items() == [((0,), 1), ((1,), 1)]


def test_bfs_examples():
    assert racg_bfs(PAIR, 4) == racg_growth_closed(PAIR, 4)
    s = racg_bfs(EDGE, 3)
    assert s[(1, 1)] == 2 and s[(2, 1)] == 1
    assert [c for _, c in s.specialize().sorted_items()] == [1, 2, 2, 2]


def test_bfs_guard():
    with pytest.raises(GuardExceeded):
        racg_bfs(EDGE, 13)


def test_poincare_examples():
    assert [c for _, c in poincare(EDGE, 5).sorted_items()] == [1, 2, 2, 2, 2, 2]
    assert poincare(POINT, 5).sorted_items() == [((0,), 1), ((1,), 1)]
    assert [c for _, c in poincare(PAIR, 5).sorted_items()] == [1, 2, 1]


def test_peo_examples():
    one = racg_growth_peo(POINT, None, 3)
    assert one[(1,)] == 1 and one[(2,)] == 0
    assert racg_growth_peo(EDGE, None, 3)[(1, 1)] == 2


def test_peo_rejects_cycle():
    with pytest.raises(NotAPeo):
        racg_growth_peo(CORPUS["c4_mixed"], None, 3)
    with pytest.raises(NotAPeo):
        racg_growth_peo(CORPUS["path4"], (1, 3, 0, 2), 3)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_bfs_matches_closed_form(name):
    g = CORPUS[name]
    bfs = racg_bfs(g, 8)
    assert bfs == racg_growth_closed(g, 8)
    assert poincare(g, 8) == bfs.specialize()


@pytest.mark.parametrize("name", sorted(n for n, g in CORPUS.items() if find_peo(g) is not None))
def test_peo_matches_closed_form(name):
    g = CORPUS[name]
    assert racg_growth_peo(g, None, 7) == racg_growth_closed(g, 7)


@settings(max_examples=25, deadline=None)
@given(marked_graphs(max_n=5))
def test_bfs_random(g):
    assert racg_bfs(g, 6) == racg_growth_closed(g, 6)
    assert poincare_by_substitution(g, 6) == racg_growth_closed(g, 6).specialize()


@settings(max_examples=25, deadline=None)
@given(marked_graphs(max_n=4), st.lists(st.integers(0, 3), max_size=8))
def test_normal_form_is_reduced_and_stable(g, word):
    word = [v % g.n for v in word]
    c = coxeter_normal_form(g, word)
    assert coxeter_reduce(g, c) == c
    assert coxeter_normal_form(g, c) == c
    # multiplying by the inverse (the reversed word) gives the identity
    assert coxeter_reduce(g, list(word) + list(reversed(word))) == ()


def test_elements_are_distinct_normal_forms():
    elems = racg_elements(CORPUS["paw"], 5)
    assert all(coxeter_normal_form(CORPUS["paw"], w) == w for w in elems)


@pytest.mark.parametrize("name", ["iso_edge", "iso_path3"])
def test_enveloping_algebra_matches_group(name):
    g = CORPUS[name]
    t = Truncation.total(g.n, 6)
    assert ug_hilbert(g, t) == racg_growth_closed(g, t)
