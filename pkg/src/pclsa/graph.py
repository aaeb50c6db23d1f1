"""Marked graphs: validation, structural predicates and the join construction."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Any, Iterable, Mapping, Sequence

from .algebra import Exponent
from .errors import GraphIssue, GraphValidationError


@dataclass(frozen=True)
class SimpleGraph:
    """Unmarked simple graph on vertices ``0..n-1``; edges are sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        return cls(n, frozenset((min(a, b), max(a, b)) for a, b in edges))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(combinations(range(n), 2)))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


@dataclass(frozen=True)
class MarkedGraph:
    """Finite simple graph with odd and odd-isotropic vertex markings.

    Vertices are the integers ``0..n-1`` (their order is the total order used
    for canonical words); ``names`` holds the user-facing labels.
    """

    names: tuple[str, ...]
    edges: frozenset[tuple[int, int]]
    odd: frozenset[int] = frozenset()
    isotropic: frozenset[int] = frozenset()
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj: list[set[int]] = [set() for _ in self.names]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def vertices(self) -> range:
        return range(len(self.names))

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def is_odd(self, i: int) -> bool:
        return i in self.odd

    def is_isotropic(self, i: int) -> bool:
        return i in self.isotropic

    def index(self, name: str | int) -> int:
        if isinstance(name, int) and not isinstance(name, bool):
            if 0 <= name < self.n:
                return name
            raise KeyError(name)
        return self.names.index(str(name))

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges)

    def remarked(self, odd: Iterable[int], isotropic: Iterable[int]) -> "MarkedGraph":
        return MarkedGraph(self.names, self.edges, frozenset(odd), frozenset(isotropic))

    def all_isotropic(self) -> "MarkedGraph":
        every = frozenset(self.vertices)
        return MarkedGraph(self.names, self.edges, every, every)

    def relabeled(self, perm: Sequence[int]) -> "MarkedGraph":
        """Graph with old vertex ``v`` moved to position ``perm[v]``."""
        names = [""] * self.n
        for v, p in enumerate(perm):
            names[p] = self.names[v]
        edges = frozenset((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in self.edges)
        return MarkedGraph(
            tuple(names),
            edges,
            frozenset(perm[v] for v in self.odd),
            frozenset(perm[v] for v in self.isotropic),
        )

    def vector(self, m: Mapping[str | int, int] | Sequence[int]) -> Exponent:
        """Dense exponent tuple from a {vertex: count} mapping or a sequence."""
        if isinstance(m, Mapping):
            out = [0] * self.n
            for key, v in m.items():
                try:
                    i = self.index(key)
                except (KeyError, ValueError):
                    raise KeyError(f"unknown vertex {key!r}") from None
                if int(v) < 0:
                    raise ValueError(f"negative multiplicity at {key!r}")
                out[i] = int(v)
            return tuple(out)
        m = tuple(int(v) for v in m)
        if len(m) != self.n or min(m, default=0) < 0:
            raise ValueError(f"expected {self.n} non-negative entries, got {m}")
        return m

    def named(self, m: Sequence[int]) -> dict[str, int]:
        return {self.names[i]: v for i, v in enumerate(m) if v}

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": list(self.names),
            "edges": [[self.names[a], self.names[b]] for a, b in sorted(self.edges)],
            "odd": [self.names[i] for i in sorted(self.odd)],
            "isotropic": [self.names[i] for i in sorted(self.isotropic)],
        }


def validate(raw: Mapping[str, Any]) -> MarkedGraph:
    """Check a raw ``{"vertices", "edges", "odd", "isotropic"}`` description.

    Every violated invariant is collected before raising, so the error lists
    the whole diagnosis at once.
    """
    issues: list[GraphIssue] = []
    names = [str(v) for v in raw.get("vertices", [])]
    seen: dict[str, int] = {}
    for i, name in enumerate(names):
        if name in seen:
            issues.append(GraphIssue("DuplicateVertex", f"vertex {name!r} declared twice"))
        else:
            seen[name] = i

    def lookup(name: Any, where: str) -> int | None:
        key = str(name)
        if key not in seen:
            issues.append(GraphIssue("UnknownVertex", f"{where} refers to undeclared vertex {key!r}"))
            return None
        return seen[key]

    edges: set[tuple[int, int]] = set()
    for pair in raw.get("edges", []):
        if len(pair) != 2:
            issues.append(GraphIssue("MalformedEdge", f"edge {pair!r} is not a pair"))
            continue
        a, b = (lookup(v, "edge") for v in pair)
        if a is None or b is None:
            continue
        if a == b:
            issues.append(GraphIssue("LoopEdge", f"loop at {names[a]!r}"))
            continue
        key = (min(a, b), max(a, b))
        if key in edges:
            issues.append(GraphIssue("DuplicateEdge", f"edge {names[a]!r}-{names[b]!r} repeated"))
        edges.add(key)

    odd = {i for i in (lookup(v, "odd") for v in raw.get("odd", [])) if i is not None}
    iso = {i for i in (lookup(v, "isotropic") for v in raw.get("isotropic", [])) if i is not None}
    for i in sorted(iso - odd):
        issues.append(GraphIssue("IsotropicNotOdd", f"isotropic vertex {names[i]!r} is not odd"))

    if issues:
        raise GraphValidationError(issues)
    return MarkedGraph(tuple(names), frozenset(edges), frozenset(odd), frozenset(iso))


def load_graph(path: str) -> MarkedGraph:
    with open(path, encoding="utf-8") as fh:
        return validate(json.load(fh))


def make_graph(
    n_or_names: int | Sequence[str],
    edges: Iterable[Sequence[Any]] = (),
    odd: Iterable[Any] = (),
    isotropic: Iterable[Any] = (),
) -> MarkedGraph:
    """Shorthand constructor; integer vertex names ``"1".."n"`` when given a count."""
    names = [str(i) for i in range(1, n_or_names + 1)] if isinstance(n_or_names, int) else list(n_or_names)
    return validate(
        {
            "vertices": names,
            "edges": [[str(a), str(b)] for a, b in edges],
            "odd": [str(v) for v in odd],
            "isotropic": [str(v) for v in isotropic],
        }
    )


# ---------------------------------------------------------------------------
# structural predicates


def is_connected(g: MarkedGraph, s: Iterable[int]) -> bool:
    """Connectivity of the induced subgraph; the empty set is not connected."""
    s = set(s)
    if not s:
        return False
    start = min(s)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v] & s:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == s


def is_star(g: MarkedGraph, s: Iterable[int], center: int) -> bool:
    s = set(s)
    if center not in s or len(s) < 2:
        return False
    leaves = s - {center}
    if not leaves <= g.adj[center]:
        return False
    return all(not g.adjacent(a, b) for a, b in combinations(sorted(leaves), 2))


def star_center(g: MarkedGraph, s: Iterable[int]) -> int | None:
    """Center of the star spanned by ``s``, or None if ``s`` spans no star.

    For a single edge either endpoint qualifies; the non-isotropic endpoint is
    chosen when exactly one endpoint is isotropic, otherwise the first vertex.
    """
    s = sorted(set(s))
    if len(s) < 2:
        raise ValueError("a star needs at least two vertices")
    if len(s) == 2:
        a, b = s
        if not g.adjacent(a, b):
            return None
        if g.is_isotropic(a) and not g.is_isotropic(b):
            return b
        return a
    for c in s:
        if is_star(g, s, c):
            return c
    return None


def is_peo(g: MarkedGraph, order: Sequence[int]) -> bool:
    """Each vertex with its earlier neighbours (inside ``order``) is a clique."""
    pos = {v: k for k, v in enumerate(order)}
    if len(pos) != len(order):
        return False
    for k, v in enumerate(order):
        earlier = [w for w in order[:k] if g.adjacent(v, w)]
        if any(not g.adjacent(a, b) for a, b in combinations(earlier, 2)):
            return False
    return True


def find_peo(g: MarkedGraph, s: Iterable[int] | None = None) -> tuple[int, ...] | None:
    """Perfect elimination order of the induced subgraph on ``s``.

    Maximum-cardinality search (ties to the lowest index) visits vertices so
    that, for chordal graphs, each vertex's already-visited neighbours form a
    clique; the visit order is then checked exhaustively.
    """
    s = sorted(set(g.vertices if s is None else s))
    weight = {v: 0 for v in s}
    order: list[int] = []
    remaining = set(s)
    while remaining:
        v = min(remaining, key=lambda u: (-weight[u], u))
        order.append(v)
        remaining.discard(v)
        for w in g.adj[v] & remaining:
            weight[w] += 1
    return tuple(order) if is_peo(g, order) else None


def has_peo_exhaustive(g: MarkedGraph, s: Iterable[int] | None = None) -> bool:
    s = sorted(set(g.vertices if s is None else s))
    return any(is_peo(g, p) for p in permutations(s))


def join_graph(g: MarkedGraph, s: Sequence[int]) -> SimpleGraph:
    """Blow each vertex ``i`` up into a clique of size ``s[i]``.

    Cliques of adjacent vertices are joined completely; vertices with
    ``s[i] == 0`` disappear.
    """
    blocks: list[list[int]] = []
    k = 0
    for i in g.vertices:
        blocks.append(list(range(k, k + s[i])))
        k += s[i]
    edges: set[tuple[int, int]] = set()
    for i in g.vertices:
        edges.update(combinations(blocks[i], 2))
    for a, b in g.edges:
        for u in blocks[a]:
            for v in blocks[b]:
                edges.add((min(u, v), max(u, v)))
    return SimpleGraph(k, frozenset(edges))


def induced_simple(g: MarkedGraph, s: Iterable[int]) -> SimpleGraph:
    s = sorted(set(s))
    pos = {v: k for k, v in enumerate(s)}
    return SimpleGraph(len(s), frozenset((pos[a], pos[b]) for a, b in g.edges if a in pos and b in pos))
