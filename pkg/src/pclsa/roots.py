"""Root multiplicities and the explicit root set.

Multiplicities come from Moebius inversion over the divisors of m applied to
the q-coefficients of marked chromatic polynomials.  ``root_verdict`` is the
independent combinatorial description of which m are roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .algebra import Exponent, QPoly, Truncation, content, height, quotient, support, vec_leq, vec_sub
from .chromatic import chromatic_coeff_of_q
from .errors import EmptySupport, GuardExceeded, NegativeResult, NonIntegerResult
from .graph import MarkedGraph, is_connected, star_center

SIMPLE = "SimpleRoot"
DOUBLED_ODD = "DoubledOddRoot"
GENERIC = "GenericRoot"
NOT_ROOT = "NotRoot"

INVERSE_MAX_HEIGHT = 8


@dataclass(frozen=True)
class RootVerdict:
    is_root: bool
    classification: str
    support_connected: bool
    neighbor_sum_ok: bool
    in_P: bool
    is_star_element: bool
    in_K20: bool
    in_K31: bool

    def flags(self) -> dict[str, bool]:
        return {
            "support_connected": self.support_connected,
            "neighbor_sum_ok": self.neighbor_sum_ok,
            "in_P": self.in_P,
            "is_star_element": self.is_star_element,
            "in_K20": self.in_K20,
            "in_K31": self.in_K31,
        }


@dataclass(frozen=True)
class SignedMultiplicity:
    m: Exponent
    mult: int
    parity: str  # "even" or "odd"

    @property
    def sign(self) -> int:
        return 1 if self.parity == "even" else -1


def mobius(n: int) -> int:
    """Moebius function by trial division."""
    if n < 1:
        raise ValueError("mobius needs a positive integer")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def epsilon(g: MarkedGraph, m: Sequence[int]) -> int:
    """+1 when the entries of m at odd vertices sum to an even number."""
    return 1 if sum(m[i] for i in g.odd) % 2 == 0 else -1


def multiplicity(g: MarkedGraph, m: Sequence[int]) -> int:
    """Dimension of the degree-m piece of the Lie superalgebra."""
    m = tuple(m)
    if not any(m):
        raise EmptySupport("multiplicity needs |m| >= 1")
    return _multiplicity(g, m)


@lru_cache(maxsize=None)
def _multiplicity(g: MarkedGraph, m: Exponent) -> int:
    total = Fraction(0)
    for ell in divisors(content(m)):
        mu = mobius(ell)
        if not mu:
            continue
        sub = quotient(m, ell)
        sign = epsilon(g, sub) * (-1) ** (height(sub) - 1)
        total += Fraction(mu, ell) * sign * chromatic_coeff_of_q(g, sub)
    total *= epsilon(g, m)
    if total.denominator != 1:
        raise NonIntegerResult(f"mult{m} = {total} is not an integer")
    if total < 0:
        raise NegativeResult(f"mult{m} = {total} is negative")
    return total.numerator


def root_verdict(g: MarkedGraph, m: Sequence[int]) -> RootVerdict:
    """Classify m by the combinatorial root description (no Lie algebra)."""
    m = tuple(m)
    supp = support(m)
    if not supp:
        raise EmptySupport("root_verdict needs |m| >= 1")
    iso_big = [i for i in supp if g.is_isotropic(i) and m[i] >= 2]
    neighbor_ok = all(sum(m[j] for j in g.adj[i]) >= m[i] for i in iso_big)
    connected = is_connected(g, supp)

    if len(supp) == 1:
        (i,) = supp
        if m[i] == 1:
            cls = SIMPLE
        elif m[i] == 2 and g.is_odd(i) and not g.is_isotropic(i):
            cls = DOUBLED_ODD
        else:
            cls = NOT_ROOT
        return RootVerdict(cls != NOT_ROOT, cls, connected, neighbor_ok, False, False, False, False)

    in_p = connected and neighbor_ok
    star = star_center(g, supp) is not None
    in_k20 = in_k31 = False
    if in_p and star:
        values = {m[i] for i in supp}
        leaves_ok = all(
            g.is_isotropic(a) and g.is_isotropic(b)
            for a, b in combinations(supp, 2)
            if not g.adjacent(a, b)
        )
        if len(values) == 1 and leaves_ok and any(g.is_isotropic(i) for i in supp):
            (value,) = values
            odd_count = sum(1 for i in supp if g.is_odd(i))
            in_k20 = odd_count % 2 == 0 and value >= 2
            in_k31 = odd_count % 2 == 1 and value >= 3
    cls = GENERIC if in_p and not (in_k20 or in_k31) else NOT_ROOT
    return RootVerdict(cls != NOT_ROOT, cls, connected, neighbor_ok, in_p, star, in_k20, in_k31)


def enumerate_roots(g: MarkedGraph, height_cap: int) -> list[SignedMultiplicity]:
    """All roots of height at most ``height_cap`` in graded order."""
    if height_cap < 1:
        raise ValueError("height_cap must be >= 1")
    out = []
    for m in Truncation.total(g.n, height_cap).exponents():
        if not any(m):
            continue
        mult = multiplicity(g, m)
        if mult:
            out.append(SignedMultiplicity(m, mult, "even" if epsilon(g, m) == 1 else "odd"))
    return out


def roots_below(g: MarkedGraph, m: Sequence[int]) -> list[SignedMultiplicity]:
    """Roots beta with beta <= m componentwise."""
    m = tuple(m)
    caps = Truncation(g.n, m, sum(m))
    out = []
    for beta in caps.exponents():
        if any(beta):
            mult = multiplicity(g, beta)
            if mult:
                out.append(SignedMultiplicity(beta, mult, "even" if epsilon(g, beta) == 1 else "odd"))
    return out


def chromatic_from_multiplicities(g: MarkedGraph, m: Sequence[int]) -> QPoly:
    """Rebuild Pi_m(q) from root multiplicities.

    Sums over multisets {(beta, k_beta)} of distinct roots with
    sum k_beta * beta = m of (-1)^(sum k) prod eps^k C(q eps mult, k),
    then multiplies by (-1)^|m|.
    """
    m = tuple(m)
    if not any(m):
        raise EmptySupport("needs |m| >= 1")
    if sum(m) > INVERSE_MAX_HEIGHT:
        raise GuardExceeded(f"composition search limited to |m| <= {INVERSE_MAX_HEIGHT}")
    roots = roots_below(g, m)
    factors: dict[tuple[int, int], QPoly] = {}

    def factor(idx: int, k: int) -> QPoly:
        key = (idx, k)
        if key not in factors:
            r = roots[idx]
            factors[key] = QPoly.scaled_binomial(r.sign * r.mult, k) * (r.sign ** k)
        return factors[key]

    total = QPoly()

    def rec(idx: int, rest: Exponent, acc: QPoly, ksum: int) -> None:
        nonlocal total
        if not any(rest):
            total = total + acc * ((-1) ** ksum)
            return
        if idx == len(roots):
            return
        beta = roots[idx].m
        rec(idx + 1, rest, acc, ksum)
        cur, k = rest, 0
        while vec_leq(beta, cur):
            cur, k = vec_sub(cur, beta), k + 1
            rec(idx + 1, cur, acc * factor(idx, k), ksum + k)

    rec(0, m, QPoly.constant(1), 0)
    return total * ((-1) ** sum(m))

