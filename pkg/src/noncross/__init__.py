"""Exact counting of connected noncrossing graphs and related binomial sums.

The package computes the sequence N_n (connected graphs on n vertices in
convex position whose edges do not cross) by four independent routes, the
auxiliary sums f1..f5 and their common generalization h_{j,k,l} by three
routes, checks everything against mod-3 congruences and a brute-force
enumerator, and exposes the whole thing through a CLI and a small HTTP
service. All arithmetic is exact; there are no floating-point numbers
anywhere.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .exact import binom, factorial, lucas_binom_mod_p
from .oracle import ChordGraph, EnumStats, chords_cross, enumerate_graphs
from .sequences import (
    SequenceId,
    SumParams,
    IdentityId,
    f_value,
    h_sum,
    kummer_pair,
    n_closed,
    n_direct,
    n_gf_series,
    n_lemma,
    verify_identity,
)
from .series import Series, SeriesMod3, solve_fixed_point

__all__ = [
    "binom",
    "factorial",
    "lucas_binom_mod_p",
    "Series",
    "SeriesMod3",
    "solve_fixed_point",
    "SequenceId",
    "SumParams",
    "IdentityId",
    "n_direct",
    "n_lemma",
    "n_gf_series",
    "n_closed",
    "h_sum",
    "f_value",
    "kummer_pair",
    "verify_identity",
    "ChordGraph",
    "EnumStats",
    "chords_cross",
    "enumerate_graphs",
    "__version__",
]
