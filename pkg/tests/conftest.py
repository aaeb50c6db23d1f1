from itertools import combinations

import pytest
from hypothesis import strategies as st

from pclsa.corpus import CORPUS
from pclsa.graph import make_graph


@st.composite
def marked_graphs(draw, min_n=1, max_n=4):
    """Random marked graph; isotropic vertices are always odd."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    edges = [p for p in pairs if draw(st.booleans())]
    odd = [v for v in range(1, n + 1) if draw(st.booleans())]
    iso = [v for v in odd if draw(st.booleans())]
    return make_graph(n, edges, odd, iso)


@st.composite
def graph_and_exponent(draw, max_n=4, max_height=4):
    g = draw(marked_graphs(max_n=max_n))
    m = draw(st.lists(st.integers(0, max_height), min_size=g.n, max_size=g.n))
    if not any(m):
        m[0] = 1
    while sum(m) > max_height:
        k = max(range(g.n), key=lambda i: m[i])
        m[k] -= 1
    return g, tuple(m)


@pytest.fixture
def path4():
    return CORPUS["path4"]


@pytest.fixture
def paw():
    return CORPUS["paw"]


@pytest.fixture
def iso_path3():
    return CORPUS["iso_path3"]


@pytest.fixture
def apex_edge():
    return CORPUS["apex_edge"]


@pytest.fixture
def even_edge():
    return CORPUS["even_edge"]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
