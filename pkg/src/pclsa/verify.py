"""Property suite run by ``pclsa verify``.

Each property cross-checks two independent computations on one graph and
reports the first exponent where they disagree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .algebra import Exponent, Truncation, unit_vector
from .chromatic import (
    BRUTE_MAX_HEIGHT,
    count_colorings_bruteforce,
    marked_chromatic,
    marked_chromatic_peo,
    marked_chromatic_via_partitions,
)
from .graph import MarkedGraph, find_peo
from .independence import indep_series
from .racg import poincare_by_substitution, racg_bfs, racg_growth_closed, racg_growth_peo
from .roots import chromatic_from_multiplicities, multiplicity, root_verdict
from .traces import denominator_check, inversion_check, peel_multiplicities, ug_hilbert

SERIES_POWERS = (-2, -1, 1, 2, 3)
BRUTE_QS = range(5)
ALL_K_MAX_VERTICES = 4
SAMPLED_K = 6


@dataclass(frozen=True)
class Caps:
    vertex: int = 4
    degree: int = 8
    height: int = 6
    length: int = 8

    def __post_init__(self) -> None:
        for name in ("vertex", "degree", "height", "length"):
            if getattr(self, name) < 1:
                raise ValueError(f"cap {name} must be positive")

    def region(self, g: MarkedGraph) -> Truncation:
        return Truncation.uniform(g.n, self.vertex, self.degree)


@dataclass(frozen=True)
class PropertyResult:
    graph: str
    name: str
    ok: bool
    checked: int
    counterexample: Exponent | None = None
    detail: str = ""


def exponents(g: MarkedGraph, height: int) -> Iterator[Exponent]:
    for m in Truncation.total(g.n, height).exponents():
        if any(m):
            yield m


def _scan(label: str, name: str, items, test: Callable) -> PropertyResult:
    count = 0
    for m in items:
        count += 1
        bad = test(m)
        if bad:
            return PropertyResult(label, name, False, count, m, str(bad))
    return PropertyResult(label, name, True, count)


def check_engines(label: str, g: MarkedGraph, caps: Caps) -> PropertyResult:
    def test(m):
        ref = marked_chromatic(g, m)
        if marked_chromatic_via_partitions(g, m) != ref:
            return "partitions engine differs"
        if find_peo(g, [i for i, v in enumerate(m) if v]) is not None and marked_chromatic_peo(g, m) != ref:
            return "peo engine differs"
        if sum(m) <= BRUTE_MAX_HEIGHT:
            for q in BRUTE_QS:
                if count_colorings_bruteforce(g, m, q) != ref(q):
                    return f"brute force differs at q={q}"
        return None

    return _scan(label, "chromatic engines agree", exponents(g, caps.height), test)


def check_power_series(label: str, g: MarkedGraph, caps: Caps) -> PropertyResult:
    height = min(caps.height, 5)
    trunc = Truncation.total(g.n, height)
    series = indep_series(g, trunc)
    powers = {q: series ** q for q in SERIES_POWERS}

    def test(m):
        p = marked_chromatic(g, m)
        for q, s in powers.items():
            if s[m] != p(q):
                return f"coefficient differs at q={q}"
        return None

    return _scan(label, "independence series power", exponents(g, height), test)


def check_root_set(label: str, g: MarkedGraph, caps: Caps) -> PropertyResult:
    def test(m):
        mult = multiplicity(g, m)
        if (mult > 0) != root_verdict(g, m).is_root:
            return f"mult={mult} but verdict={root_verdict(g, m).classification}"
        return None

    result = _scan(label, "root set characterization", exponents(g, caps.height), test)
    if not result.ok:
        return result
    for i in g.vertices:
        simple = unit_vector(g.n, i)
        doubled = unit_vector(g.n, i, 2)
        want = 1 if g.is_odd(i) and not g.is_isotropic(i) else 0
        if multiplicity(g, simple) != 1:
            return PropertyResult(label, result.name, False, result.checked, simple, "simple root")
        if multiplicity(g, doubled) != want:
            return PropertyResult(label, result.name, False, result.checked, doubled, "doubled simple root")
    return result


def check_inverse_formula(label: str, g: MarkedGraph, caps: Caps) -> PropertyResult:
    def test(m):
        if chromatic_from_multiplicities(g, m) != marked_chromatic(g, m):
            return "rebuilt polynomial differs"
        return None

    return _scan(label, "chromatic from multiplicities", exponents(g, min(caps.height, 5)), test)


def _subsets(g: MarkedGraph, rng: random.Random) -> list[tuple[int, ...]]:
    every = [K for k in range(g.n + 1) for K in combinations(g.vertices, k)]
    if g.n <= ALL_K_MAX_VERTICES:
        return every
    picked = rng.sample(every, min(SAMPLED_K, len(every)))
    return sorted(set(picked) | {tuple(g.vertices), ()})


def check_inversion(
    label: str, g: MarkedGraph, caps: Caps, rng: random.Random, subsets: list[tuple[int, ...]] | None = None
) -> PropertyResult:
    trunc = Truncation.uniform(g.n, caps.vertex, min(caps.degree, 6))
    if subsets is None:
        subsets = _subsets(g, rng)
    for k, K in enumerate(subsets, 1):
        report = inversion_check(g, K, trunc)
        if not report.ok:
            return PropertyResult(label, "inversion lemma", False, k, report.first(), report.name)
    return PropertyResult(label, "inversion lemma", True, len(subsets))


def check_denominator(label: str, g: MarkedGraph, caps: Caps) -> PropertyResult:
    trunc = Truncation.uniform(g.n, caps.vertex, min(caps.degree, caps.height))
    for report in denominator_check(g, trunc):
        if not report.ok:
            return PropertyResult(label, "denominator identity", False, report.checked, report.first(), report.name)
    return PropertyResult(label, "denominator identity", True, trunc.size())


def check_peeling(label: str, g: MarkedGraph, caps: Caps) -> PropertyResult:
    trunc = Truncation.uniform(g.n, caps.vertex, min(caps.degree, caps.height))
    peeled = {r.m: r.mult for r in peel_multiplicities(g, trunc)}

    def test(m):
        if peeled.get(m, 0) != multiplicity(g, m):
            return f"peeled {peeled.get(m, 0)} vs formula {multiplicity(g, m)}"
        return None

    items = [m for m in trunc.exponents() if any(m)]
    return _scan(label, "peeled multiplicities", items, test)


def check_racg(label: str, g: MarkedGraph, caps: Caps) -> PropertyResult:
    closed = racg_growth_closed(g, caps.length)
    bfs = racg_bfs(g, caps.length)
    diff = closed.differences(bfs)
    if diff:
        return PropertyResult(label, "coxeter growth", False, len(closed), diff[0][0], "bfs vs closed form")
    if closed.specialize() != poincare_by_substitution(g, caps.length):
        return PropertyResult(label, "coxeter growth", False, len(closed), None, "poincare routes")
    if bfs.specialize() != closed.specialize():
        return PropertyResult(label, "coxeter growth", False, len(closed), None, "bfs poincare")
    if find_peo(g) is not None:
        diff = racg_growth_peo(g, None, caps.length).differences(closed)
        if diff:
            return PropertyResult(label, "coxeter growth", False, len(closed), diff[0][0], "peo corollary")
    if g.isotropic == frozenset(g.vertices):
        trunc = Truncation.uniform(g.n, caps.vertex, min(caps.degree, caps.height))
        diff = ug_hilbert(g, trunc).differences(closed.restrict(trunc))
        if diff:
            return PropertyResult(label, "coxeter growth", False, len(closed), diff[0][0], "enveloping algebra")
    return PropertyResult(label, "coxeter growth", True, len(closed))


def verify_graph(
    label: str,
    g: MarkedGraph,
    caps: Caps = Caps(),
    seed: int = 0,
    subsets: list[tuple[int, ...]] | None = None,
) -> list[PropertyResult]:
    """Run every property; ``subsets`` pins the K sets for the inversion lemma."""
    rng = random.Random(seed)
    return [
        check_engines(label, g, caps),
        check_power_series(label, g, caps),
        check_root_set(label, g, caps),
        check_inverse_formula(label, g, caps),
        check_inversion(label, g, caps, rng, subsets),
        check_denominator(label, g, caps),
        check_peeling(label, g, caps),
        check_racg(label, g, caps),
    ]
