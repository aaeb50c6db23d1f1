"""Built-in marked graphs used by the verify suite and the tests."""

from __future__ import annotations

from .graph import MarkedGraph, find_peo, make_graph

# name -> (vertex count, edges, odd, isotropic); vertices are named "1".."n"
_SPECS = {
    # path with an isotropic end, and its independence series example
    "path4": (4, [(1, 2), (2, 3), (3, 4)], [4], [4]),
    # triangle 2-3-4 with pendant 1; the triangle's far side is isotropic
    "paw": (4, [(1, 2), (2, 3), (2, 4), (3, 4)], [3, 4], [3, 4]),
    "iso_edge": (2, [(1, 2)], [1, 2], [1, 2]),
    "iso_path3": (3, [(1, 2), (2, 3)], [1, 2, 3], [1, 2, 3]),
    "even_edge": (2, [(1, 2)], [], []),
    "apex_edge": (2, [(1, 2)], [1], [1]),
    "odd_edge": (2, [(1, 2)], [1, 2], []),
    "k3_mixed": (3, [(1, 2), (1, 3), (2, 3)], [1, 2], [1]),
    "k4_mixed": (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], [1, 2, 3], [1, 2]),
    "c4_mixed": (4, [(1, 2), (2, 3), (3, 4), (1, 4)], [1, 2, 3], [1, 3]),
    "star5": (5, [(1, 2), (1, 3), (1, 4), (1, 5)], [1, 2, 3, 4], [1, 2, 3]),
}


def _build(name: str) -> MarkedGraph:
    n, edges, odd, iso = _SPECS[name]
    return make_graph(n, edges, odd, iso)


CORPUS: dict[str, MarkedGraph] = {name: _build(name) for name in _SPECS}


def corpus(max_vertices: int | None = None) -> dict[str, MarkedGraph]:
    return {k: g for k, g in CORPUS.items() if max_vertices is None or g.n <= max_vertices}


def chordal_corpus() -> dict[str, MarkedGraph]:
    return {k: g for k, g in CORPUS.items() if find_peo(g) is not None}


def get(name: str) -> MarkedGraph:
    try:
        return CORPUS[name]
    except KeyError:
        raise KeyError(f"no corpus graph named {name!r}; known: {sorted(CORPUS)}") from None
