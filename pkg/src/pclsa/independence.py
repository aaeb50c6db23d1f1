"""Marked independent multisets and the marked independence series."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .algebra import Exponent, MSeries, Truncation, vec_leq, vec_sub
from .errors import EmptySupport
from .graph import MarkedGraph


def _independent_sets(g: MarkedGraph, allowed: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Independent vertex subsets of ``allowed`` in lexicographic order."""

    def rec(start: int, chosen: tuple[int, ...], blocked: frozenset[int]) -> Iterator[tuple[int, ...]]:
        yield chosen
        for k in range(start, len(allowed)):
            v = allowed[k]
            if v not in blocked:
                yield from rec(k + 1, chosen + (v,), blocked | g.adj[v])

    return rec(0, (), frozenset())


def enumerate_indep(
    g: MarkedGraph,
    cap: Truncation | Sequence[int],
    allowed: Iterable[int] | None = None,
) -> Iterator[Exponent]:
    """Every independent multiset inside ``cap``, as an exponent vector.

    Non-isotropic vertices occur at most once; the empty multiset comes first.
    ``allowed`` restricts the underlying set (used for induced subgraphs).
    """
    trunc = cap if isinstance(cap, Truncation) else Truncation.box(cap)
    allowed = sorted(g.vertices if allowed is None else set(allowed))
    allowed = [v for v in allowed if trunc.cap(v) >= 1]
    budget = trunc.max_degree
    for s in _independent_sets(g, allowed):
        if len(s) > budget:
            continue
        ranges = []
        for v in s:
            top = trunc.cap(v) if g.is_isotropic(v) else 1
            ranges.append(range(1, top + 1))
        yield from _fill(g.n, s, ranges, trunc)


def _fill(n: int, s: tuple[int, ...], ranges: list[range], trunc: Truncation) -> Iterator[Exponent]:
    base = [0] * n

    def rec(k: int, used: int) -> Iterator[Exponent]:
        if k == len(s):
            e = tuple(base)
            if trunc.contains(e):
                yield e
            return
        for mult in ranges[k]:
            if trunc.degree is not None and used + mult + (len(s) - k - 1) > trunc.degree:
                break
            base[s[k]] = mult
            yield from rec(k + 1, used + mult)
        base[s[k]] = 0

    return rec(0, 0)


def indep_series(
    g: MarkedGraph,
    cap: Truncation | Sequence[int],
    sign: int = 1,
    allowed: Iterable[int] | None = None,
) -> MSeries:
    """``I(G, x)`` (sign=+1) or ``I(G, -x)`` (sign=-1), truncated to ``cap``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    trunc = cap if isinstance(cap, Truncation) else Truncation.box(cap)
    coeffs = {}
    for e in enumerate_indep(g, trunc, allowed):
        coeffs[e] = -1 if sign == -1 and sum(e) % 2 else 1
    return MSeries(trunc, coeffs)


def independence_polynomial(g: MarkedGraph) -> list[int]:
    """Ordinary one-variable independence polynomial (markings ignored)."""
    counts = [0] * (g.n + 1)
    for s in _independent_sets(g, list(g.vertices)):
        counts[len(s)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def pk_counts(g: MarkedGraph, m: Sequence[int], engine: str = "enumerate") -> list[int]:
    """``[|P_1|, ..., |P_|m||]``: ordered k-tuples of nonempty independent
    multisets whose union is the multiset ``{i^m_i}``.

    ``engine="enumerate"`` counts by recursion over the blocks;
    ``engine="series"`` reads the coefficient of ``x^m`` in ``(I(G,x)-1)^k``.
    """
    m = tuple(m)
    if not any(m):
        raise EmptySupport("pk_counts needs an exponent with nonempty support")
    if engine == "enumerate":
        return _pk_enumerate(g, m)
    if engine == "series":
        return _pk_series(g, m)
    raise ValueError(f"unknown engine {engine!r}")


def _pk_enumerate(g: MarkedGraph, m: Exponent) -> list[int]:
    blocks = [u for u in enumerate_indep(g, Truncation.box(m)) if any(u)]
    total = sum(m)

    @lru_cache(maxsize=None)
    def ways(rest: Exponent) -> tuple[int, ...]:
        # ways(rest)[k] = number of ordered k-tuples of blocks covering rest
        if not any(rest):
            return (1,)
        acc = [0] * (sum(rest) + 1)
        for u in blocks:
            if vec_leq(u, rest):
                for k, c in enumerate(ways(vec_sub(rest, u))):
                    if c:
                        acc[k + 1] += c
        return tuple(acc)

    counts = list(ways(m))
    counts += [0] * (total + 1 - len(counts))
    return counts[1:]


def _pk_series(g: MarkedGraph, m: Exponent) -> list[int]:
    trunc = Truncation.box(m)
    tail = indep_series(g, trunc) - MSeries.one(trunc)
    out = []
    power = MSeries.one(trunc)
    for _ in range(sum(m)):
        power = power * tail
        out.append(int(power[m]))
    return out

