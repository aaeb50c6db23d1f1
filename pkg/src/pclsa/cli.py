"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 engine not
applicable, 4 resource guard hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import corpus
from .algebra import Rational, Truncation
from .chromatic import ENGINES, chromatic, count_colorings_bruteforce
from .errors import EmptySupport, GraphValidationError, GuardExceeded, NotAPeo, PclsaError
from .graph import MarkedGraph, load_graph
from .independence import indep_series
from .racg import poincare, racg_growth_closed
from .roots import enumerate_roots, multiplicity, root_verdict
from .traces import enumerate_mprime
from .verify import Caps, verify_graph

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_ENGINE, EXIT_GUARD = 0, 1, 2, 3, 4
SERIES_KINDS = ("indep", "ug-hilbert", "racg", "poincare")


class InputError(Exception):
    pass


def rational(c: Rational) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


# ---------------------------------------------------------------------------
# input


def read_graph(source: str) -> MarkedGraph:
    """A JSON graph file, or the name of a built-in corpus graph."""
    if os.path.exists(source):
        try:
            return load_graph(source)
        except (OSError, json.JSONDecodeError, TypeError, AttributeError) as exc:
            raise InputError(f"cannot read graph {source!r}: {exc}") from None
    if source in corpus.CORPUS:
        return corpus.get(source)
    raise InputError(f"no graph file or corpus graph named {source!r}")


def read_exponent(g: MarkedGraph, raw: str | None) -> tuple[int, ...]:
    if raw is None:
        raise InputError("--m is required")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"--m is not valid JSON: {exc}") from None
    if not isinstance(data, (dict, list)):
        raise InputError("--m must be a JSON object {vertex: count}")
    try:
        m = g.vector(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None
    if not any(m):
        raise EmptySupport("m must have nonempty support")
    return m


def read_subset(g: MarkedGraph, raw: str | None) -> list[int] | None:
    if raw is None:
        return None
    names = json.loads(raw) if raw.strip().startswith("[") else [v for v in raw.split(",") if v]
    try:
        return sorted({g.index(str(v)) for v in names})
    except ValueError:
        raise InputError(f"--K names an unknown vertex: {raw}") from None


def region(g: MarkedGraph, args: argparse.Namespace) -> Truncation:
    return Truncation.uniform(g.n, args.cap_vertex, args.cap_degree)


# ---------------------------------------------------------------------------
# commands


def cmd_chromatic(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    m = read_exponent(g, args.m)
    engine = args.engine or "pk"
    if engine not in ENGINES:
        raise InputError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    if args.q is not None and engine == "brute":
        if args.q < 0:
            raise InputError("--q must be non-negative for brute force")
        value = count_colorings_bruteforce(g, m, args.q)
        emit(args, {"m": g.named(m), "engine": engine, "q": args.q, "value": rational(value)}, str(value))
        return EXIT_OK
    p = chromatic(g, m, engine)
    if args.q is not None:
        value = p(args.q)
        emit(args, {"m": g.named(m), "engine": engine, "q": args.q, "value": rational(value)}, rational(value))
        return EXIT_OK
    payload = {
        "m": g.named(m),
        "engine": engine,
        "monomial": str(p),
        "binomial": p.binomial_str(),
        "coefficients": [rational(c) for c in p.monomial()],
        "coeff_of_q": rational(p.coeff_of_q()),
    }
    emit(args, payload, f"{p}\n{p.binomial_str()}")
    return EXIT_OK


def cmd_mult(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    m = read_exponent(g, args.m)
    verdict = root_verdict(g, m)
    payload = {
        "m": g.named(m),
        "mult": multiplicity(g, m),
        "classification": verdict.classification,
        "flags": verdict.flags(),
    }
    # the diagnostic record is JSON in both formats
    print(json.dumps(payload, indent=None if args.format == "json" else 2))
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    rows = enumerate_roots(g, args.height)
    if args.format == "json":
        for r in rows:
            print(json.dumps({"m": g.named(r.m), "mult": r.mult, "parity": r.parity}))
    else:
        for r in rows:
            print(f"{json.dumps(g.named(r.m))}\t{r.mult}\t{r.parity}")
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    kind = args.kind
    if kind == "indep":
        s = indep_series(g, region(g, args))
    elif kind == "ug-hilbert":
        s = enumerate_mprime(g, region(g, args), read_subset(g, args.K))
    elif kind == "racg":
        s = racg_growth_closed(g, args.length)
    else:
        s = poincare(g, args.length)
    for e, c in s.sorted_items():
        named = {"t": e[0]} if kind == "poincare" else g.named(e)
        if args.format == "json":
            print(json.dumps({"exponent": named, "coefficient": rational(c)}))
        else:
            print(f"{json.dumps(named)}\t{rational(c)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    caps = Caps(args.cap_vertex, args.cap_degree, args.height, args.length)
    if args.corpus or args.graph is None:
        graphs = list(corpus.CORPUS.items())
    else:
        graphs = [(args.graph, read_graph(args.graph))]
    ok = True
    for label, g in graphs:
        subsets = None
        if args.K is not None:
            subsets = [tuple(read_subset(g, args.K))]
        for r in verify_graph(label, g, caps, args.seed, subsets):
            ok &= r.ok
            where = None if r.counterexample is None else g.named(r.counterexample)
            if args.format == "json":
                print(json.dumps({"graph": r.graph, "property": r.name, "ok": r.ok, "checked": r.checked,
                                  "counterexample": where, "detail": r.detail}))
            else:
                status = "PASS" if r.ok else "FAIL"
                extra = "" if r.ok else f"  first counterexample {json.dumps(where)} ({r.detail})"
                print(f"{status}  {r.graph}: {r.name} [{r.checked}]{extra}")
    return EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "chromatic": cmd_chromatic,
    "mult": cmd_mult,
    "roots": cmd_roots,
    "series": cmd_series,
    "verify": cmd_verify,
}


def positive(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph JSON file or built-in corpus name")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap-vertex", type=positive, default=4)
    common.add_argument("--cap-degree", type=positive, default=8)
    common.add_argument("--height", type=positive, default=6)
    common.add_argument("--length", type=positive, default=8)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="pclsa", description="Marked graphs, chromatic polynomials and root multiplicities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", parents=[common], help="marked chromatic polynomial")
    p.add_argument("--m", help='exponent as JSON, e.g. \'{"1": 2, "2": 1}\'')
    p.add_argument("--engine", help=f"one of {', '.join(ENGINES)}")
    p.add_argument("--q", type=int)

    p = sub.add_parser("mult", parents=[common], help="root multiplicity and verdict")
    p.add_argument("--m")

    sub.add_parser("roots", parents=[common], help="all roots up to --height")

    p = sub.add_parser("series", parents=[common], help="coefficient table of a series")
    p.add_argument("kind", choices=SERIES_KINDS)
    p.add_argument("--K", help="ending alphabet for ug-hilbert, e.g. 1,3")

    p = sub.add_parser("verify", parents=[common], help="run the property suite")
    p.add_argument("--corpus", action="store_true", help="verify every built-in graph")
    p.add_argument("--K", help="check the inversion lemma for this vertex subset only")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command != "verify" and args.graph is None:
        print("error: --graph is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except GraphValidationError as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotAPeo as exc:
        print(f"engine not applicable: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except GuardExceeded as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, EmptySupport, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PclsaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
