"""Marked chromatic polynomials, computed by four independent engines.

* ``pk``          -- sum over k of |P_k(m)| C(q,k)            (reference)
* ``partitions``  -- ordinary chromatic polynomials of join graphs
* ``peo``         -- closed product formula along a perfect elimination order
* ``brute``       -- direct enumeration of marked multi-colorings
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Sequence

from .algebra import Exponent, QPoly, is_integral, support
from .errors import EmptySupport, GuardExceeded, NonIntegerResult, NotAPeo
from .graph import MarkedGraph, SimpleGraph, find_peo, is_peo, join_graph
from .independence import pk_counts

ENGINES = ("pk", "partitions", "peo", "brute")

BRUTE_MAX_Q = 6
BRUTE_MAX_HEIGHT = 8


# ---------------------------------------------------------------------------
# ordinary chromatic polynomial


def _canonical_key(n: int, edges: frozenset[tuple[int, int]]) -> tuple[int, frozenset[tuple[int, int]]]:
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    order = sorted(range(n), key=lambda v: (deg[v], v))
    pos = {v: k for k, v in enumerate(order)}
    return n, frozenset((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in edges)


@lru_cache(maxsize=4096)
def _chromatic_key(key: tuple[int, frozenset[tuple[int, int]]]) -> QPoly:
    n, edges = key
    if not edges:
        return QPoly.from_monomial([0] * n + [1])
    if len(edges) == n * (n - 1) // 2:
        return QPoly.shifted_binomial(0, n) * math.factorial(n)
    a, b = max(edges)
    deleted = edges - {(a, b)}
    # contract b into a, then close the gap left by b
    def relabel(v: int) -> int:
        v = a if v == b else v
        return v - 1 if v > b else v

    contracted = frozenset(
        (min(x, y), max(x, y))
        for x, y in ((relabel(u), relabel(v)) for u, v in deleted)
        if x != y
    )
    return _chromatic_key(_canonical_key(n, deleted)) - _chromatic_key(_canonical_key(n - 1, contracted))


def ordinary_chromatic(h: SimpleGraph) -> QPoly:
    """Classical chromatic polynomial by memoized deletion-contraction."""
    return _chromatic_key(_canonical_key(h.n, h.edges))


# ---------------------------------------------------------------------------
# partition tuples


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n with parts in weakly decreasing order, reverse-lex."""
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(n, largest)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_tuples(g: MarkedGraph, m: Sequence[int]) -> Iterator[dict[int, tuple[int, ...]]]:
    """The set S(m): a partition of m_i per support vertex, forced to (1^m_i)
    at non-isotropic vertices."""
    supp = support(m)
    choices = []
    for i in supp:
        if g.is_isotropic(i):
            choices.append(list(partitions(m[i])))
        else:
            choices.append([(1,) * m[i]])
    for combo in product(*choices):
        yield dict(zip(supp, combo))


def multiplicity_factor(lam: tuple[int, ...]) -> int:
    """prod_k d_k! where d_k counts the parts of lam equal to k."""
    out = 1
    for d in Counter(lam).values():
        out *= math.factorial(d)
    return out


# ---------------------------------------------------------------------------
# engines


def _require_support(m: Sequence[int]) -> None:
    if not any(m):
        raise EmptySupport("marked chromatic polynomial needs |m| >= 1")


def _check_counts(p: QPoly, m: Sequence[int]) -> QPoly:
    # p counts colorings, so it takes integer values; p(0) = 0 for |m| >= 1
    for q in range(sum(m) + 1):
        value = p(q)
        if not is_integral(value):
            raise NonIntegerResult(f"Pi_m({q}) = {value} is not an integer for m={tuple(m)}")
    if p(0) != 0:
        raise NonIntegerResult(f"Pi_m(0) = {p(0)} should vanish for m={tuple(m)}")
    return p


def marked_chromatic(g: MarkedGraph, m: Sequence[int]) -> QPoly:
    """Reference engine: sum_k |P_k(m,G)| C(q,k)."""
    m = tuple(m)
    _require_support(m)
    return _check_counts(QPoly([0, *pk_counts(g, m)]), m)


def marked_chromatic_via_partitions(g: MarkedGraph, m: Sequence[int]) -> QPoly:
    """Sum over S(m) of the chromatic polynomial of the join graph, divided
    by the symmetry factor of each partition."""
    m = tuple(m)
    _require_support(m)
    total = QPoly()
    for lam in partition_tuples(g, m):
        lengths = tuple(len(lam.get(i, ())) for i in g.vertices)
        divisor = 1
        for parts in lam.values():
            divisor *= multiplicity_factor(parts)
        total = total + ordinary_chromatic(join_graph(g, lengths)) / divisor
    return _check_counts(total, m)


def restrict_order(g: MarkedGraph, m: Sequence[int], order: Sequence[int] | None) -> tuple[int, ...]:
    """A verified PEO of the induced subgraph on supp(m)."""
    supp = set(support(m))
    if order is None:
        found = find_peo(g, supp)
        if found is None:
            raise NotAPeo("support of m does not induce a chordal graph")
        return found
    if not supp <= set(order):
        raise NotAPeo("order does not cover the support of m")
    restricted = tuple(v for v in order if v in supp)
    if not is_peo(g, restricted):
        raise NotAPeo(f"{restricted} is not a perfect elimination order")
    return restricted


@lru_cache(maxsize=1024)
def _shifted(shift: int, k: int) -> QPoly:
    return QPoly.shifted_binomial(shift, k)


def marked_chromatic_peo(g: MarkedGraph, m: Sequence[int], order: Sequence[int] | None = None) -> QPoly:
    """Product formula along a perfect elimination order of supp(m).

    Each vertex j picks ell(lambda_j) colours avoiding those already used on
    its earlier neighbours, then distributes the parts of lambda_j over them.
    """
    m = tuple(m)
    _require_support(m)
    order = restrict_order(g, m, order)
    earlier = {j: [i for i in order[:k] if g.adjacent(i, j)] for k, j in enumerate(order)}
    total = QPoly()
    for lam in partition_tuples(g, m):
        term = QPoly.constant(1)
        scale = Fraction(1)
        for j in order:
            ell = len(lam[j])
            b = sum(len(lam[i]) for i in earlier[j])
            term = term * _shifted(b, ell)
            scale *= Fraction(math.factorial(ell), multiplicity_factor(lam[j]))
        total = total + term * scale
    return _check_counts(total, m)


def count_colorings_bruteforce(g: MarkedGraph, m: Sequence[int], q: int) -> int:
    """Count marked multi-colorings with colours {1..q} by direct search."""
    m = tuple(m)
    if q < 0:
        raise ValueError("q must be non-negative")
    if q > BRUTE_MAX_Q or sum(m) > BRUTE_MAX_HEIGHT:
        raise GuardExceeded(f"brute force limited to q <= {BRUTE_MAX_Q}, |m| <= {BRUTE_MAX_HEIGHT}")
    supp = support(m)
    options = []
    for i in supp:
        pick = combinations_with_replacement if g.is_isotropic(i) else combinations
        options.append([frozenset(c) for c in pick(range(q), m[i])])
    chosen: dict[int, frozenset[int]] = {}

    def rec(k: int) -> int:
        if k == len(supp):
            return 1
        i = supp[k]
        count = 0
        for colours in options[k]:
            if all(not (colours & chosen[j]) for j in g.adj[i] if j in chosen):
                chosen[i] = colours
                count += rec(k + 1)
                del chosen[i]
        return count

    return rec(0)


def marked_chromatic_brute(g: MarkedGraph, m: Sequence[int]) -> QPoly:
    """Interpolate the polynomial through brute-force counts at q = 0..|m|."""
    m = tuple(m)
    _require_support(m)
    if sum(m) > BRUTE_MAX_Q:
        raise GuardExceeded(f"interpolation needs q up to |m| <= {BRUTE_MAX_Q}")
    values = [count_colorings_bruteforce(g, m, q) for q in range(sum(m) + 1)]
    coeffs = []
    # binomial-basis coefficients are forward differences at 0
    while values:
        coeffs.append(values[0])
        values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    return QPoly(coeffs)


def chromatic(g: MarkedGraph, m: Sequence[int], engine: str = "pk", order: Sequence[int] | None = None) -> QPoly:
    if engine == "pk":
        return marked_chromatic(g, m)
    if engine == "partitions":
        return marked_chromatic_via_partitions(g, m)
    if engine == "peo":
        return marked_chromatic_peo(g, m, order)
    if engine == "brute":
        return marked_chromatic_brute(g, m)
    raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def chromatic_coeff_of_q(g: MarkedGraph, m: Exponent) -> Fraction | int:
    return _coeff_cache(g, tuple(m))


@lru_cache(maxsize=8192)
def _coeff_cache(g: MarkedGraph, m: Exponent):
    return marked_chromatic(g, m).coeff_of_q()
