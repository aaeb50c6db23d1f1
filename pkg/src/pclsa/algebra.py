"""Exact rational arithmetic: q-polynomials and truncated multivariate series.

Rationals are :class:`fractions.Fraction` (integral values are kept as ``int``
for speed; the two mix freely).  Exponent vectors are plain tuples of
non-negative ints, one slot per graph vertex, so the support of a vector is
just its set of nonzero slots.

A :class:`QPoly` is stored in the binomial basis ``C(q,0), C(q,1), ...``;
the monomial basis is derived on demand.

An :class:`MSeries` is a finite coefficient table together with an explicit
:class:`Truncation` region.  Arithmetic never leaves the region, and binary
operations work on the intersection of the operands' regions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import NotInvertible, NotUnitSeries

Rational = Union[int, Fraction]
Exponent = tuple[int, ...]


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def is_integral(c: Rational) -> bool:
    return isinstance(c, int) or c.denominator == 1


def binom(n: Rational, k: int) -> Rational:
    """Generalized binomial ``n(n-1)...(n-k+1)/k!`` for any rational ``n``.

    For negative integers this is the convention C(-n,k) = (-1)^k C(n+k-1,k).
    """
    if k < 0:
        return 0
    if isinstance(n, int) and n >= 0:
        return math.comb(n, k)
    num: Rational = 1
    for j in range(k):
        num *= n - j
    return _norm(Fraction(num) / math.factorial(k))


# ---------------------------------------------------------------------------
# exponent vectors


def zero_vector(n: int) -> Exponent:
    return (0,) * n


def unit_vector(n: int, i: int, value: int = 1) -> Exponent:
    e = [0] * n
    e[i] = value
    return tuple(e)


def support(m: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, v in enumerate(m) if v)


def height(m: Sequence[int]) -> int:
    return sum(m)


def vec_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def vec_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def vec_scale(a: Exponent, k: int) -> Exponent:
    return tuple(k * x for x in a)


def content(m: Sequence[int]) -> int:
    """gcd of the entries; every common divisor of m divides it."""
    return math.gcd(*m) if any(m) else 0


def divides(ell: int, m: Sequence[int]) -> bool:
    return all(v % ell == 0 for v in m)


def quotient(m: Sequence[int], ell: int) -> Exponent:
    if not divides(ell, m):
        raise ValueError(f"{ell} does not divide {tuple(m)}")
    return tuple(v // ell for v in m)


def exponents_up_to(caps: Sequence[int]) -> Iterator[Exponent]:
    """All vectors componentwise below ``caps`` (box enumeration)."""
    return product(*(range(c + 1) for c in caps))


# ---------------------------------------------------------------------------
# univariate polynomials in q


def _poly_mul(a: Sequence[Rational], b: Sequence[Rational]) -> list[Rational]:
    if not a or not b:
        return []
    out: list[Rational] = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _falling_monomial(k: int, shift: Rational = 0) -> list[Rational]:
    """Monomial coefficients of (q-shift)(q-shift-1)...(q-shift-k+1)."""
    poly: list[Rational] = [1]
    for j in range(k):
        poly = _poly_mul(poly, [-(shift + j), 1])
    return poly


def _trim(coeffs: Iterable[Rational]) -> tuple[Rational, ...]:
    out = [_norm(Fraction(c)) if isinstance(c, Fraction) else c for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class QPoly:
    """Exact polynomial in q, held in the binomial basis."""

    __slots__ = ("_b",)

    def __init__(self, binomial_coeffs: Iterable[Rational] = ()):
        self._b = _trim(binomial_coeffs)

    # constructors -----------------------------------------------------
    @classmethod
    def binomial(cls, k: int) -> "QPoly":
        return cls([0] * k + [1])

    @classmethod
    def constant(cls, c: Rational) -> "QPoly":
        return cls([c])

    @classmethod
    def from_monomial(cls, coeffs: Sequence[Rational]) -> "QPoly":
        coeffs = _trim(coeffs)
        if not coeffs:
            return cls()
        # binomial coefficients are the forward differences at q = 0
        values = [_eval_monomial(coeffs, q) for q in range(len(coeffs))]
        out = []
        for _ in range(len(coeffs)):
            out.append(values[0])
            values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
        return cls(out)

    @classmethod
    def shifted_binomial(cls, shift: Rational, k: int) -> "QPoly":
        """C(q - shift, k) as a polynomial in q."""
        mono = _falling_monomial(k, shift)
        f = math.factorial(k)
        return cls.from_monomial([Fraction(c) / f for c in mono])

    @classmethod
    def scaled_binomial(cls, a: int, k: int) -> "QPoly":
        """C(a*q, k) as a polynomial in q."""
        poly: list[Rational] = [1]
        for j in range(k):
            poly = _poly_mul(poly, [-j, a])
        f = math.factorial(k)
        return cls.from_monomial([Fraction(c) / f for c in poly])

    # views ------------------------------------------------------------
    @property
    def binomial_coeffs(self) -> tuple[Rational, ...]:
        return self._b

    def monomial(self) -> tuple[Rational, ...]:
        out: list[Rational] = []
        for k, c in enumerate(self._b):
            if not c:
                continue
            term = _falling_monomial(k)
            f = math.factorial(k)
            out.extend([0] * (len(term) - len(out)))
            for i, t in enumerate(term):
                out[i] += Fraction(c * t, f) if isinstance(c, int) else c * t / f
        return _trim(out)

    @property
    def degree(self) -> int:
        return len(self._b) - 1

    def coeff(self, power: int) -> Rational:
        mono = self.monomial()
        return mono[power] if power < len(mono) else 0

    def coeff_of_q(self) -> Rational:
        """Coefficient of q^1, read straight off the binomial basis."""
        total = Fraction(0)
        for k, c in enumerate(self._b):
            if k >= 1 and c:
                total += Fraction((-1) ** (k - 1), k) * c
        return _norm(total)

    def __call__(self, q: Rational) -> Rational:
        total: Rational = 0
        for k, c in enumerate(self._b):
            if c:
                total += c * binom(q, k)
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    def is_zero(self) -> bool:
        return not self._b

    # arithmetic -------------------------------------------------------
    def __add__(self, other: "QPoly | Rational") -> "QPoly":
        other = _as_qpoly(other)
        n = max(len(self._b), len(other._b))
        a = self._b + (0,) * (n - len(self._b))
        b = other._b + (0,) * (n - len(other._b))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self._b)

    def __sub__(self, other: "QPoly | Rational") -> "QPoly":
        return self + (-_as_qpoly(other))

    def __rsub__(self, other: Rational) -> "QPoly":
        return _as_qpoly(other) - self

    def __mul__(self, other: "QPoly | Rational") -> "QPoly":
        if isinstance(other, QPoly):
            return QPoly.from_monomial(_poly_mul(self.monomial(), other.monomial()))
        return QPoly(c * other for c in self._b)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "QPoly":
        return QPoly(Fraction(c) / other for c in self._b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._b == other._b

    def __hash__(self) -> int:
        return hash(self._b)

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def __str__(self) -> str:
        return format_monomial(self.monomial())

    def binomial_str(self) -> str:
        terms = []
        for k, c in enumerate(self._b):
            if c:
                terms.append((c, f"C(q,{k})"))
        return _join_terms(terms)


def _as_qpoly(x: "QPoly | Rational") -> QPoly:
    return x if isinstance(x, QPoly) else QPoly.constant(x)


def _eval_monomial(coeffs: Sequence[Rational], q: Rational) -> Rational:
    total: Rational = 0
    for c in reversed(coeffs):
        total = total * q + c
    return total


def _join_terms(terms: list[tuple[Rational, str]]) -> str:
    """Render (coefficient, symbol) pairs; symbol '' is a constant term."""
    if not terms:
        return "0"
    parts = []
    for idx, (c, sym) in enumerate(terms):
        c = Fraction(c)
        neg = c < 0
        a, b = abs(c.numerator), c.denominator
        if not sym:
            body = f"{a}" if b == 1 else f"{a}/{b}"
        else:
            body = sym if a == 1 else f"{a}*{sym}"
            if b != 1:
                body += f"/{b}"
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def format_monomial(coeffs: Sequence[Rational], var: str = "q") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sym = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        terms.append((c, sym))
    return _join_terms(terms)


def qpoly_binomial(k: int) -> QPoly:
    return QPoly.binomial(k)


def qpoly_coeff_of_q(p: QPoly) -> Rational:
    return p.coeff_of_q()


# ---------------------------------------------------------------------------
# truncated multivariate series


@dataclass(frozen=True)
class Truncation:
    """Finite, downward-closed exponent region.

    ``vertex_caps`` bounds each variable separately, ``degree`` bounds the
    total degree; at least one must be given so the region is finite.
    """

    nvars: int
    vertex_caps: tuple[int, ...] | None = None
    degree: int | None = None

    def __post_init__(self) -> None:
        if self.vertex_caps is None and self.degree is None:
            raise ValueError("truncation needs a vertex cap or a degree cap")
        if self.vertex_caps is not None:
            object.__setattr__(self, "vertex_caps", tuple(int(c) for c in self.vertex_caps))
            if len(self.vertex_caps) != self.nvars:
                raise ValueError("vertex_caps length must equal nvars")
            if min(self.vertex_caps, default=0) < 0:
                raise ValueError("caps must be non-negative")
        if self.degree is not None and self.degree < 0:
            raise ValueError("degree cap must be non-negative")

    @classmethod
    def box(cls, caps: Sequence[int]) -> "Truncation":
        return cls(len(caps), tuple(caps), None)

    @classmethod
    def total(cls, nvars: int, degree: int) -> "Truncation":
        return cls(nvars, None, degree)

    @classmethod
    def uniform(cls, nvars: int, vertex_cap: int | None, degree: int | None) -> "Truncation":
        caps = None if vertex_cap is None else (vertex_cap,) * nvars
        return cls(nvars, caps, degree)

    @property
    def max_degree(self) -> int:
        bounds = []
        if self.degree is not None:
            bounds.append(self.degree)
        if self.vertex_caps is not None:
            bounds.append(sum(self.vertex_caps))
        return min(bounds)

    def cap(self, i: int) -> int:
        if self.vertex_caps is not None:
            c = self.vertex_caps[i]
            return c if self.degree is None else min(c, self.degree)
        return self.degree  # type: ignore[return-value]

    def contains(self, e: Sequence[int]) -> bool:
        if self.degree is not None and sum(e) > self.degree:
            return False
        if self.vertex_caps is not None:
            return all(x <= c for x, c in zip(e, self.vertex_caps))
        return True

    def intersect(self, other: "Truncation") -> "Truncation":
        if self.nvars != other.nvars:
            raise ValueError("cannot combine series in different variable sets")
        if self.vertex_caps is None:
            caps = other.vertex_caps
        elif other.vertex_caps is None:
            caps = self.vertex_caps
        else:
            caps = tuple(min(a, b) for a, b in zip(self.vertex_caps, other.vertex_caps))
        degs = [d for d in (self.degree, other.degree) if d is not None]
        return Truncation(self.nvars, caps, min(degs) if degs else None)

    def exponents(self) -> Iterator[Exponent]:
        """Every exponent of the region, by total degree then descending lex."""
        caps = [self.cap(i) for i in range(self.nvars)]
        for d in range(self.max_degree + 1):
            yield from _compositions(d, caps, 0)

    def size(self) -> int:
        return sum(1 for _ in self.exponents())


def _compositions(d: int, caps: list[int], i: int) -> Iterator[Exponent]:
    if i == len(caps):
        if d == 0:
            yield ()
        return
    rest = sum(caps[i + 1:])
    for v in range(min(d, caps[i]), max(0, d - rest) - 1, -1):
        for tail in _compositions(d - v, caps, i + 1):
            yield (v,) + tail


class MSeries:
    """Truncated multivariate series with exact rational coefficients."""

    __slots__ = ("trunc", "_c")

    def __init__(self, trunc: Truncation, coeffs: Mapping[Exponent, Rational] | None = None):
        self.trunc = trunc
        table: dict[Exponent, Rational] = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != trunc.nvars:
                raise ValueError(f"exponent {e} has wrong length for {trunc.nvars} variables")
            if c and trunc.contains(e):
                table[e] = _norm(c) if isinstance(c, Fraction) else c
        self._c = table

    @classmethod
    def one(cls, trunc: Truncation) -> "MSeries":
        return cls(trunc, {zero_vector(trunc.nvars): 1})

    @classmethod
    def monomial(cls, trunc: Truncation, e: Exponent, c: Rational = 1) -> "MSeries":
        return cls(trunc, {tuple(e): c})

    @property
    def nvars(self) -> int:
        return self.trunc.nvars

    def __getitem__(self, e: Sequence[int]) -> Rational:
        return self._c.get(tuple(e), 0)

    def items(self) -> Iterable[tuple[Exponent, Rational]]:
        return self._c.items()

    def sorted_items(self) -> list[tuple[Exponent, Rational]]:
        return sorted(self._c.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def __len__(self) -> int:
        return len(self._c)

    @property
    def constant_term(self) -> Rational:
        return self[zero_vector(self.nvars)]

    def restrict(self, trunc: Truncation) -> "MSeries":
        return MSeries(self.trunc.intersect(trunc), self._c)

    def map_coeffs(self, fn) -> "MSeries":
        return MSeries(self.trunc, {e: fn(e, c) for e, c in self._c.items()})

    def signed(self) -> "MSeries":
        """Substitute x_i -> -x_i for every variable."""
        return self.map_coeffs(lambda e, c: -c if sum(e) % 2 else c)

    def specialize(self) -> "MSeries":
        """Substitute x_i -> t for all i (exact only on a pure degree region)."""
        if self.trunc.vertex_caps is not None:
            raise ValueError("specialization needs a pure total-degree truncation")
        out: dict[Exponent, Rational] = {}
        for e, c in self._c.items():
            key = (sum(e),)
            out[key] = out.get(key, 0) + c
        return MSeries(Truncation.total(1, self.trunc.degree), out)

    def differences(self, other: "MSeries") -> list[tuple[Exponent, Rational, Rational]]:
        """Exponents (in the common region) where the two series disagree."""
        region = self.trunc.intersect(other.trunc)
        keys = {e for e in list(self._c) + list(other._c) if region.contains(e)}
        bad = [(e, self[e], other[e]) for e in keys if self[e] != other[e]]
        return sorted(bad, key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    # arithmetic -------------------------------------------------------
    def __add__(self, other: "MSeries") -> "MSeries":
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return MSeries(self.trunc.intersect(other.trunc), out)

    def __neg__(self) -> "MSeries":
        return self.map_coeffs(lambda e, c: -c)

    def __sub__(self, other: "MSeries") -> "MSeries":
        return self + (-other)

    def __mul__(self, other: "MSeries | Rational") -> "MSeries":
        if isinstance(other, MSeries):
            return series_mul(self, other)
        return self.map_coeffs(lambda e, c: c * other)

    def __rmul__(self, other: Rational) -> "MSeries":
        return self.map_coeffs(lambda e, c: c * other)

    def __pow__(self, q: int) -> "MSeries":
        return series_int_pow(self, q)

    def inverse(self) -> "MSeries":
        return series_inverse(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._c == other._c

    def __repr__(self) -> str:
        shown = ", ".join(f"{e}: {c}" for e, c in self.sorted_items()[:8])
        more = ", ..." if len(self._c) > 8 else ""
        return f"MSeries({self.trunc}, {{{shown}{more}}})"


def series_mul(a: MSeries, b: MSeries) -> MSeries:
    """Exact product restricted to the intersection of both regions."""
    region = a.trunc.intersect(b.trunc)
    out: dict[Exponent, Rational] = {}
    limit = region.max_degree
    bitems = sorted(((sum(e), e, c) for e, c in b.items()), key=lambda t: t[0])
    for ea, ca in a.items():
        da = sum(ea)
        if da > limit:
            continue
        for db, eb, cb in bitems:
            if da + db > limit:
                break
            e = tuple(x + y for x, y in zip(ea, eb))
            if region.contains(e):
                out[e] = out.get(e, 0) + ca * cb
    return MSeries(region, out)


def series_inverse(a: MSeries) -> MSeries:
    """Multiplicative inverse by order-by-order recursion."""
    a0 = a.constant_term
    if not a0:
        raise NotInvertible("series has zero constant term")
    inv0 = Fraction(1) / a0
    terms = [(e, c) for e, c in a.items() if any(e)]
    out: dict[Exponent, Rational] = {}
    for e in a.trunc.exponents():
        if not any(e):
            out[e] = _norm(inv0)
            continue
        acc: Rational = 0
        for d, c in terms:
            if all(x <= y for x, y in zip(d, e)):
                rest = out.get(tuple(y - x for x, y in zip(d, e)), 0)
                if rest:
                    acc += c * rest
        if acc:
            out[e] = _norm(-inv0 * acc)
    return MSeries(a.trunc, out)


def series_int_pow(a: MSeries, q: int) -> MSeries:
    """``a**q`` for any integer q as sum_k C(q,k) (a-1)^k; a must start with 1."""
    if a.constant_term != 1:
        raise NotUnitSeries("integer powers need constant term 1")
    one = MSeries.one(a.trunc)
    tail = a - one
    result = one
    power = one
    for k in range(1, a.trunc.max_degree + 1):
        c = binom(q, k)
        power = series_mul(power, tail)
        if not len(power):
            break
        if c:
            result = result + power * c
    return result
