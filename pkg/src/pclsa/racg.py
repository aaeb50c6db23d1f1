"""Growth series of right-angled Coxeter groups.

Generators are involutions; two generators commute exactly when the graph
has no edge between them.  Every vertex is treated as odd isotropic, so the
growth series is the inverse of the signed independence series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Exponent, MSeries, Truncation, binom
from .chromatic import multiplicity_factor, partition_tuples, restrict_order
from .errors import EngineDisagreement, GuardExceeded, NotAPeo
from .graph import MarkedGraph, SimpleGraph, find_peo
from .independence import indep_series, independence_polynomial

MAX_LENGTH = 12
MAX_ELEMENTS = 10**6

Word = tuple[int, ...]


def as_coxeter_graph(g: MarkedGraph | SimpleGraph) -> MarkedGraph:
    """The same graph with every vertex marked odd isotropic."""
    if isinstance(g, SimpleGraph):
        names = tuple(str(i + 1) for i in range(g.n))
        return MarkedGraph(names, g.edges).all_isotropic()
    return g.all_isotropic()


def _append(g: MarkedGraph, word: list[int], s: int) -> bool:
    """Multiply a reduced word by s on the right in place.

    Returns True when the length grew, False when s cancelled a letter.
    """
    for k in range(len(word) - 1, -1, -1):
        u = word[k]
        if u == s:
            del word[k]
            return False
        if g.adjacent(u, s):
            break
    word.append(s)
    return True


def coxeter_reduce(g: MarkedGraph | SimpleGraph, word: Sequence[int]) -> Word:
    g = as_coxeter_graph(g)
    out: list[int] = []
    for s in word:
        _append(g, out, s)
    return tuple(out)


def coxeter_normal_form(g: MarkedGraph | SimpleGraph, word: Sequence[int]) -> Word:
    """Lex-least reduced word: reduce, then extract the smallest minimal piece."""
    g = as_coxeter_graph(g)
    rest = list(coxeter_reduce(g, word))
    out = []
    while rest:
        best = g.n
        pos = -1
        blocked: set[int] = set()
        for k, v in enumerate(rest):
            if v not in blocked and v < best:
                best, pos = v, k
            blocked.add(v)
            blocked |= g.adj[v]
        out.append(best)
        del rest[pos]
    return tuple(out)


@dataclass(frozen=True)
class CoxeterElement:
    word: Word
    nvars: int

    @classmethod
    def from_word(cls, g: MarkedGraph | SimpleGraph, word: Sequence[int]) -> "CoxeterElement":
        return cls(coxeter_normal_form(g, word), g.n)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def degree(self) -> Exponent:
        out = [0] * self.nvars
        for v in self.word:
            out[v] += 1
        return tuple(out)


def racg_growth_closed(g: MarkedGraph | SimpleGraph, cap: Truncation | int) -> MSeries:
    """1 / I(G, -x) with all vertices isotropic."""
    g = as_coxeter_graph(g)
    trunc = Truncation.total(g.n, cap) if isinstance(cap, int) else cap
    return indep_series(g, trunc, -1).inverse()


def racg_elements(g: MarkedGraph | SimpleGraph, length_cap: int) -> dict[Word, Exponent]:
    """Breadth-first closure from the identity: normal form -> multidegree."""
    g = as_coxeter_graph(g)
    if length_cap > MAX_LENGTH:
        raise GuardExceeded(f"BFS limited to length {MAX_LENGTH}")
    seen: dict[Word, Exponent] = {(): (0,) * g.n}
    frontier: list[Word] = [()]
    for _ in range(length_cap):
        nxt = []
        for w in frontier:
            for s in g.vertices:
                word = list(w)
                if not _append(g, word, s):
                    continue
                c = coxeter_normal_form(g, word)
                deg = CoxeterElement(tuple(word), g.n).degree
                if c in seen:
                    # the grading does not depend on the reduced expression
                    assert seen[c] == deg, (c, word)
                    continue
                seen[c] = deg
                nxt.append(c)
        if len(seen) > MAX_ELEMENTS:
            raise GuardExceeded(f"more than {MAX_ELEMENTS} group elements")
        frontier = nxt
    return seen


def racg_bfs(g: MarkedGraph | SimpleGraph, length_cap: int) -> MSeries:
    """Count group elements of length <= length_cap per multidegree."""
    coeffs: dict[Exponent, int] = {}
    for deg in racg_elements(g, length_cap).values():
        coeffs[deg] = coeffs.get(deg, 0) + 1
    return MSeries(Truncation.total(g.n, length_cap), coeffs)


def poincare_by_substitution(g: MarkedGraph | SimpleGraph, cap: int) -> MSeries:
    """1 / I_G(-t/(1+t)) with I_G the ordinary independence polynomial."""
    counts = independence_polynomial(as_coxeter_graph(g))
    trunc = Truncation.total(1, cap)
    u = MSeries(trunc, {(j,): (-1) ** j for j in range(1, cap + 1)})
    total = MSeries(trunc)
    power = MSeries.one(trunc)
    for c in counts:
        total = total + power * c
        power = power * u
    return total.inverse()


def poincare(g: MarkedGraph | SimpleGraph, cap: int) -> MSeries:
    """One-variable growth series, computed two ways and cross-checked."""
    g = as_coxeter_graph(g)
    direct = racg_growth_closed(g, cap).specialize()
    other = poincare_by_substitution(g, cap)
    if direct != other:
        raise EngineDisagreement(f"poincare routes differ: {direct.differences(other)[:3]}")
    return direct


def racg_growth_peo(g: MarkedGraph | SimpleGraph, order: Sequence[int] | None, cap: Truncation | int) -> MSeries:
    """Coefficients from the closed sum over partition tuples along a PEO.

    For each j the binomial's top entry sums the lengths over j and its
    earlier neighbours in the order.
    """
    g = as_coxeter_graph(g)
    trunc = Truncation.total(g.n, cap) if isinstance(cap, int) else cap
    if order is None:
        order = find_peo(g)
        if order is None:
            raise NotAPeo("graph is not chordal")
    else:
        restrict_order(g, (1,) * g.n, order)
    coeffs: dict[Exponent, Fraction | int] = {}
    for m in trunc.exponents():
        if not any(m):
            coeffs[m] = 1
            continue
        local = restrict_order(g, m, order)
        closed = {j: [i for i in local[: k + 1] if i == j or g.adjacent(i, j)] for k, j in enumerate(local)}
        total = Fraction(0)
        for lam in partition_tuples(g, m):
            lengths = {j: len(parts) for j, parts in lam.items()}
            term = Fraction((-1) ** (sum(m) + sum(lengths.values())))
            for j in local:
                ell = lengths[j]
                term *= binom(sum(lengths[i] for i in closed[j]), ell)
                term *= Fraction(math.factorial(ell), multiplicity_factor(lam[j]))
            total += term
        coeffs[m] = total
    return MSeries(trunc, coeffs)


__all__ = [
    "as_coxeter_graph",
    "coxeter_reduce",
    "coxeter_normal_form",
    "CoxeterElement",
    "racg_growth_closed",
    "racg_elements",
    "racg_bfs",
    "poincare_by_substitution",
    "poincare",
    "racg_growth_peo",
]
