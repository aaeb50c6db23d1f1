"""Cartier-Foata monoid of a marked graph and the submonoid of PBW words.

Words are tuples of vertex ids.  Non-adjacent letters commute; the canonical
representative of a class is its lexicographically largest word.  The
submonoid M' keeps the classes in which no isotropic letter can be brought
next to a copy of itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .algebra import Exponent, MSeries, Truncation, support
from .errors import GraphIssue, GraphValidationError, GuardExceeded, InconsistentSeries
from .graph import MarkedGraph
from .independence import indep_series
from .roots import SignedMultiplicity, enumerate_roots, epsilon

MAX_DEGREE = 10
MAX_TABLE = 10**7

Word = tuple[int, ...]


@dataclass(frozen=True)
class TraceClass:
    """Commutation class, stored by its lex-max representative."""

    word: Word
    nvars: int

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def degree(self) -> Exponent:
        out = [0] * self.nvars
        for v in self.word:
            out[v] += 1
        return tuple(out)

    @property
    def letters(self) -> tuple[int, ...]:
        return support(self.degree)


def _check_letters(g: MarkedGraph, word: Sequence[int]) -> Word:
    word = tuple(word)
    bad = [v for v in word if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise GraphValidationError([GraphIssue("UnknownVertex", f"letter {v!r} is not a vertex") for v in bad])
    return word


def _canonical_word(g: MarkedGraph, word: Word) -> Word:
    rest = list(word)
    out = []
    while rest:
        # minimal pieces: first occurrences preceded only by commuting letters
        best = -1
        pos = -1
        blocked: set[int] = set()
        for k, v in enumerate(rest):
            if v not in blocked and v > best:
                best, pos = v, k
            blocked.add(v)
            blocked |= g.adj[v]
            if len(blocked) == g.n:
                break
        out.append(best)
        del rest[pos]
    return tuple(out)


def canonicalize(g: MarkedGraph, word: Sequence[int]) -> TraceClass:
    return TraceClass(_canonical_word(g, _check_letters(g, word)), g.n)


def representatives(g: MarkedGraph, word: Sequence[int]) -> set[Word]:
    """Every word in the class of ``word``, by closing under adjacent swaps."""
    start = tuple(word)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a != b and not g.adjacent(a, b):
                v = w[:k] + (b, a) + w[k + 2:]
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return seen


def initial_multiplicity(g: MarkedGraph, word: Sequence[int], i: int) -> int:
    """Largest k with [word] = [i^k w']: copies of i before the first neighbour."""
    count = 0
    for v in word:
        if v == i:
            count += 1
        elif g.adjacent(v, i):
            break
    return count


def initial_alphabet(g: MarkedGraph, word: Sequence[int]) -> set[int]:
    return {i for i in set(word) if initial_multiplicity(g, word, i) >= 1}


def ending_alphabet(g: MarkedGraph, word: Sequence[int]) -> set[int]:
    """Letters whose last occurrence commutes to the end of the word."""
    return initial_alphabet(g, tuple(reversed(tuple(word))))


def mprime_member(g: MarkedGraph, t: TraceClass | Sequence[int]) -> bool:
    """Between consecutive copies of an isotropic letter sits one of its neighbours."""
    word = t.word if isinstance(t, TraceClass) else tuple(t)
    last: dict[int, int] = {}
    for k, v in enumerate(word):
        if g.is_isotropic(v):
            if v in last and not any(g.adjacent(v, u) for u in word[last[v] + 1:k]):
                return False
            last[v] = k
    return True


def mprime_member_by_suffixes(g: MarkedGraph, word: Sequence[int]) -> bool:
    """Definitional check: every factorisation w1 w2 of every representative
    has initial multiplicity at most one for each isotropic letter in w2."""
    for w in representatives(g, word):
        for cut in range(len(w) + 1):
            tail = w[cut:]
            for i in g.isotropic:
                if initial_multiplicity(g, tail, i) >= 2:
                    return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def _as_trunc(g: MarkedGraph, cap: Truncation | Sequence[int] | int) -> Truncation:
    if isinstance(cap, Truncation):
        trunc = cap
    elif isinstance(cap, int):
        trunc = Truncation.total(g.n, cap)
    else:
        trunc = Truncation.box(cap)
    if trunc.max_degree > MAX_DEGREE:
        raise GuardExceeded(f"word enumeration limited to total degree {MAX_DEGREE}")
    return trunc


def _words(g: MarkedGraph, trunc: Truncation) -> Iterator[Word]:
    """All words whose letter counts lie in ``trunc`` (the region is down-closed)."""
    counts = [0] * g.n
    word: list[int] = []

    def rec() -> Iterator[Word]:
        yield tuple(word)
        for v in g.vertices:
            counts[v] += 1
            if trunc.contains(counts):
                word.append(v)
                yield from rec()
                word.pop()
            counts[v] -= 1

    return rec()


def _classes_by_words(g: MarkedGraph, trunc: Truncation) -> set[Word]:
    seen: set[Word] = set()
    for w in _words(g, trunc):
        if mprime_member(g, w):
            seen.add(_canonical_word(g, w))
            if len(seen) > MAX_TABLE:
                raise GuardExceeded("deduplication table exceeded")
    return seen


def _classes_by_extension(g: MarkedGraph, trunc: Truncation) -> set[Word]:
    # M' is closed under deleting the last letter, so every class is reached
    seen: set[Word] = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            counts = list(TraceClass(w, g.n).degree)
            for v in g.vertices:
                counts[v] += 1
                if trunc.contains(counts):
                    ext = w + (v,)
                    if mprime_member(g, ext):
                        c = _canonical_word(g, ext)
                        if c not in seen:
                            seen.add(c)
                            nxt.append(c)
                counts[v] -= 1
        if len(seen) > MAX_TABLE:
            raise GuardExceeded("deduplication table exceeded")
        frontier = nxt
    return seen


def mprime_classes(
    g: MarkedGraph,
    cap: Truncation | Sequence[int] | int,
    ending_in: Iterable[int] | None = None,
    engine: str = "extend",
) -> list[TraceClass]:
    trunc = _as_trunc(g, cap)
    if engine == "words":
        words = _classes_by_words(g, trunc)
    elif engine == "extend":
        words = _classes_by_extension(g, trunc)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if ending_in is not None:
        allowed = set(ending_in)
        words = {w for w in words if ending_alphabet(g, w) <= allowed}
    return [TraceClass(w, g.n) for w in sorted(words, key=lambda w: (len(w), w))]


def enumerate_mprime(
    g: MarkedGraph,
    cap: Truncation | Sequence[int] | int,
    ending_in: Iterable[int] | None = None,
    engine: str = "extend",
) -> MSeries:
    """Count M' classes per multidegree; with ``ending_in`` only classes whose
    ending alphabet lies inside it (the empty word always counts)."""
    trunc = _as_trunc(g, cap)
    coeffs: dict[Exponent, int] = {}
    for t in mprime_classes(g, trunc, ending_in, engine):
        coeffs[t.degree] = coeffs.get(t.degree, 0) + 1
    return MSeries(trunc, coeffs)


def ug_hilbert(g: MarkedGraph, cap: Truncation | Sequence[int] | int, engine: str = "extend") -> MSeries:
    """Graded dimensions of the enveloping algebra (PBW words = M' classes)."""
    return enumerate_mprime(g, cap, None, engine)


# ---------------------------------------------------------------------------
# checks


@dataclass
class SeriesReport:
    name: str
    ok: bool
    checked: int
    offending: list[tuple[Exponent, object, object]] = field(default_factory=list)

    def first(self) -> Exponent | None:
        return self.offending[0][0] if self.offending else None


def _compare(name: str, a: MSeries, b: MSeries) -> SeriesReport:
    diff = a.differences(b)
    return SeriesReport(name, not diff, a.trunc.size(), diff)


def inversion_check(g: MarkedGraph, K: Iterable[int], cap: Truncation | Sequence[int] | int) -> SeriesReport:
    """(M'_K series) * I(G,-x) against the signed independence series of G - K."""
    trunc = _as_trunc(g, cap)
    K = set(K)
    lhs = enumerate_mprime(g, trunc, K) * indep_series(g, trunc, -1)
    rhs = indep_series(g, trunc, -1, allowed=set(g.vertices) - K)
    return _compare(f"inversion K={sorted(K)}", lhs, rhs)


def root_product(g: MarkedGraph, trunc: Truncation, roots: Sequence[SignedMultiplicity]) -> MSeries:
    """prod over odd roots of (1+x^b)^mult divided by prod over even roots of (1-x^b)^mult."""
    out = MSeries.one(trunc)
    for r in roots:
        if not trunc.contains(r.m):
            continue
        if r.parity == "odd":
            factor = MSeries(trunc, {(0,) * g.n: 1, r.m: 1})
            out = out * (factor ** r.mult)
        else:
            factor = MSeries(trunc, {(0,) * g.n: 1, r.m: -1})
            out = out * (factor ** (-r.mult))
    return out


def denominator_check(g: MarkedGraph, cap: Truncation | Sequence[int] | int) -> list[SeriesReport]:
    trunc = _as_trunc(g, cap)
    inverse = indep_series(g, trunc, -1).inverse()
    hilbert = ug_hilbert(g, trunc)
    product = root_product(g, trunc, enumerate_roots(g, trunc.max_degree))
    return [
        _compare("inverse vs hilbert", inverse, hilbert),
        _compare("hilbert vs root product", hilbert, product),
        _compare("inverse vs root product", inverse, product),
    ]


def peel_multiplicities(g: MarkedGraph, cap: Truncation | Sequence[int] | int) -> list[SignedMultiplicity]:
    """Read root multiplicities off the Hilbert series by dividing out one
    factor per exponent in graded order."""
    trunc = _as_trunc(g, cap)
    rest = ug_hilbert(g, trunc)
    zero = (0,) * g.n
    out = []
    for m in trunc.exponents():
        if m == zero:
            continue
        c = rest[m]
        if c < 0 or c != int(c):
            raise InconsistentSeries(f"forced exponent {c} at {m}")
        c = int(c)
        if not c:
            continue
        odd = epsilon(g, m) == -1
        if odd:
            rest = rest * (MSeries(trunc, {zero: 1, m: 1}) ** (-c))
        else:
            rest = rest * (MSeries(trunc, {zero: 1, m: -1}) ** c)
        out.append(SignedMultiplicity(m, c, "odd" if odd else "even"))
    return out


def swap_closure_agrees(g: MarkedGraph, word: Sequence[int]) -> bool:
    """All representatives of the class share one canonical word."""
    return len({_canonical_word(g, w) for w in representatives(g, word)}) == 1


__all__ = [
    "TraceClass",
    "canonicalize",
    "representatives",
    "initial_multiplicity",
    "initial_alphabet",
    "ending_alphabet",
    "mprime_member",
    "mprime_member_by_suffixes",
    "mprime_classes",
    "enumerate_mprime",
    "ug_hilbert",
    "SeriesReport",
    "inversion_check",
    "root_product",
    "denominator_check",
    "peel_multiplicities",
    "swap_closure_agrees",
]
