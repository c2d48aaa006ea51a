"""Full acceptance battery.

One test per acceptance item, in order, so `pytest -v` reads as a
checklist. Items with a stated runtime budget assert it; everything is
exact arithmetic, so there are no tolerances anywhere.
"""

import time
from fractions import Fraction

import pytest

from noncross.congruence import n_mod3_series, predicted_residue
from noncross.oracle import enumerate_graphs
from noncross.sequences import (
    F_IDS,
    F_PARAMS,
    IdentityId,
    SequenceId,
    f_value,
    n_closed,
    n_closed_terms_factorial,
    n_direct,
    n_gf_series,
    n_lemma,
    verify_identity,
)
from noncross.sequences import _exact_int
from noncross.suites import suite_identities, suite_lagrange

N_TABLE = [1, 1, 4, 23, 156, 1162, 9192, 75819, 644908]

F_TABLE = {
    SequenceId.F1: [1, 6, 48, 420, 3840, 36036, 344064, 3325608, 32440320],
    SequenceId.F2: [0, 1, 9, 82, 765, 7266, 69930, 679764, 6659037],
    SequenceId.F3: [1, 5, 39, 338, 3075, 28770, 274134, 2645844, 25781283],
    SequenceId.F4: [0, 1, 7, 58, 515, 4746, 44758, 428772, 4154403],
    SequenceId.F5: [1, 4, 30, 256, 2310, 21504, 204204, 1966080, 19122246],
}


def test_1_connected_count_table_four_routes_to_60():
    start = time.monotonic()
    gf = n_gf_series(59)
    for n, want in enumerate(N_TABLE, start=1):
        assert n_closed(n) == want
        assert gf.coeff(n - 1) == want
        if n >= 2:
            assert n_direct(n) == want
            assert n_lemma(n - 1) == want
    for n in range(2, 61):
        v = n_closed(n)
        assert n_direct(n) == v
        assert n_lemma(n - 1) == v
        assert gf.coeff(n - 1) == v
    assert time.monotonic() - start < 10.0


def test_2_f_table_three_routes_to_40():
    start = time.monotonic()
    for seq in F_IDS:
        for n, want in enumerate(F_TABLE[seq]):
            assert f_value(seq, n, "sum") == want
            assert f_value(seq, n, "gf") == want
            if not (seq == SequenceId.F4 and n == 0):
                assert f_value(seq, n, "closed") == want
        for n in range(41):
            v = f_value(seq, n, "sum")
            assert f_value(seq, n, "gf") == v
            if not (seq == SequenceId.F4 and n == 0):
                assert f_value(seq, n, "closed") == v
    assert time.monotonic() - start < 30.0


def test_3_enumeration_matches_count_and_edge_formulas():
    start = time.monotonic()
    for n in range(1, 9):
        stats = enumerate_graphs(n)
        assert stats.connected_count == N_TABLE[n - 1]
    for n in range(1, 8):
        stats = enumerate_graphs(n + 1)
        assert stats.total_edges == f_value(SequenceId.F2, n, "sum")
    assert time.monotonic() - start < 300.0


def test_4_mod3_classification_to_2187_and_closed_to_200():
    start = time.monotonic()
    series = n_mod3_series(2187)
    for n in range(1, 2188):
        assert series.coeff(n) == predicted_residue(n), n
    for n in range(1, 201):
        assert n_closed(n) % 3 == predicted_residue(n), n
    assert time.monotonic() - start < 10.0


def test_5_f_series_residues_to_order_100():
    # f_mod3_series recomputes the exact series, reduces it, and raises
    # unless the reduction equals the polynomial-in-F form
    from noncross.congruence import f_mod3_series

    for seq in F_IDS:
        residues = f_mod3_series(seq, 100)
        assert residues.order == 100
        for n in range(101):
            assert residues.coeff(n) == f_value(seq, n, "sum") % 3


def test_6_kummer_identity_box_30_by_20():
    report = verify_identity(IdentityId.KUMMER, (30, 20))
    assert report.passed, (report.lhs, report.rhs, report.location)


def test_7_series_identities_order_30_and_randomized_lagrange():
    reports = suite_identities(order=30)
    # the battery covers the counting series, all five (j,k,l) instances,
    # the five rational forms, the half-integer box, the even-power family,
    # termwise relations, and the factorial displays
    assert len(reports) >= 40
    for report in reports:
        assert report.passed, (report.check, report.params, report.location)
    covered = {r.check for r in reports}
    assert {
        "e-n3",
        "e-hjkl",
        "e-f1to5",
        "e-a1",
        "e-2a",
        "e-mh",
        "t-relations",
        "fact-odd",
        "fact-even",
    } <= covered
    lagrange = suite_lagrange(instances=100, order=15, seed=0)
    for report in lagrange:
        assert report.passed, (report.check, report.params, report.location)
    instances = sum(
        r.params.get("instances", 0)
        for r in lagrange
        if r.check.startswith("lagrange-")
    )
    assert instances >= 200  # 100 instances through each form


def test_8_factorial_displays_match_terms_to_m_15():
    odd = verify_identity(IdentityId.FACT_ODD, (15,))
    even = verify_identity(IdentityId.FACT_EVEN, (15,))
    assert odd.passed and even.passed
    # spot-check the arithmetic behind the displays
    for m in range(16):
        t1, t2 = n_closed_terms_factorial(2 * m + 1)
        assert t1 - t2 == n_closed(2 * m + 1)
        t1, t2 = n_closed_terms_factorial(2 * m + 2)
        assert t1 - t2 == n_closed(2 * m + 2)


def test_9_integrality_is_asserted_not_rounded():
    # every closed-form value flows through exact rationals and is
    # asserted integral on the way out
    for n in range(1, 61):
        assert isinstance(n_closed(n), int)
    for seq in F_IDS:
        for n in range(41):
            if seq == SequenceId.F4 and n == 0:
                continue
            assert isinstance(f_value(seq, n, "closed"), int)
    # the guard itself: a non-integer aborts instead of rounding
    with pytest.raises(ArithmeticError):
        _exact_int(Fraction(1, 2), "probe")
