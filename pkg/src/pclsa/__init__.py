"""Partially commutative Lie superalgebras from marked graphs: chromatic
polynomials, root multiplicities, trace monoids and Coxeter growth series."""

from .algebra import MSeries, QPoly, Truncation, binom, series_int_pow, series_inverse
from .chromatic import chromatic, marked_chromatic, marked_chromatic_peo, marked_chromatic_via_partitions
from .graph import MarkedGraph, load_graph, make_graph, validate
from .independence import indep_series, pk_counts
from .racg import poincare, racg_bfs, racg_growth_closed, racg_growth_peo
from .roots import chromatic_from_multiplicities, enumerate_roots, multiplicity, root_verdict
from .traces import canonicalize, denominator_check, enumerate_mprime, inversion_check, peel_multiplicities, ug_hilbert

__version__ = "0.1.0"
