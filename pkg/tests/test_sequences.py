from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from noncross.sequences import (
    F_IDS,
    F_PARAMS,
    IdentityId,
    SequenceId,
    SumParams,
    alpha_series,
    beta_series,
    f_value,
    g_alpha,
    h_gf_series,
    h_sum,
    h_sum_reindexed,
    kummer_pair,
    n_closed,
    n_closed_terms_factorial,
    n_direct,
    n_gf_series,
    n_lemma,
    t_term,
    verify_identity,
)

N_TABLE = [1, 1, 4, 23, 156, 1162, 9192, 75819, 644908]

F_TABLE = {
    SequenceId.F1: [1, 6, 48, 420, 3840, 36036, 344064, 3325608, 32440320],
    SequenceId.F2: [0, 1, 9, 82, 765, 7266, 69930, 679764, 6659037],
    SequenceId.F3: [1, 5, 39, 338, 3075, 28770, 274134, 2645844, 25781283],
    SequenceId.F4: [0, 1, 7, 58, 515, 4746, 44758, 428772, 4154403],
    SequenceId.F5: [1, 4, 30, 256, 2310, 21504, 204204, 1966080, 19122246],
}


def test_alpha_series_low_coefficients():
    a = alpha_series(6)
    assert a.coeffs == (0, 1, 3, 16, 105, 768, 6006)


def test_g_alpha_coefficients():
    # 1/((1-x)(1-2x)) has coefficients 2^{k+1} - 1
    g = g_alpha(8)
    assert g.coeffs == tuple(2 ** (k + 1) - 1 for k in range(9))


def test_n_closed_table():
    assert [n_closed(n) for n in range(1, 10)] == N_TABLE


def test_n_direct_table():
    assert [n_direct(n) for n in range(2, 10)] == N_TABLE[1:]
    with pytest.raises(ValueError):
        n_direct(1)


def test_n_lemma_table():
    # n_lemma(n) extracts [x^{n-1}] of the kernel power, giving N_{n+1}
    assert [n_lemma(n) for n in range(1, 9)] == N_TABLE[1:]


def test_n_gf_series_table():
    ser = n_gf_series(8)
    assert list(ser.coeffs) == N_TABLE


def test_four_routes_agree_further_out():
    ser = n_gf_series(25)
    for n in range(2, 26):
        v = n_closed(n)
        assert n_direct(n) == v
        assert n_lemma(n - 1) == v
        assert ser.coeff(n - 1) == v


@pytest.mark.parametrize("seq", F_IDS)
def test_f_tables_all_methods(seq):
    for n, want in enumerate(F_TABLE[seq]):
        assert f_value(seq, n, "sum") == want
        assert f_value(seq, n, "gf") == want
        if not (seq == SequenceId.F4 and n == 0):
            assert f_value(seq, n, "closed") == want


def test_f4_at_zero():
    assert f_value(SequenceId.F4, 0, "sum") == 0
    assert f_value(SequenceId.F4, 0, "gf") == 0
    with pytest.raises(ValueError):
        f_value(SequenceId.F4, 0, "closed")


def test_f_value_argument_checks():
    with pytest.raises(ValueError):
        f_value(SequenceId.N, 3)
    with pytest.raises(ValueError):
        f_value(SequenceId.F1, -1)
    with pytest.raises(ValueError):
        f_value(SequenceId.F1, 3, "magic")


def test_pairwise_f_relations():
    # f2 + f3 = f1, f3 - f2 = f5, 3 f4 = 2 f5 - f3
    for n in range(20):
        f1 = f_value(SequenceId.F1, n)
        f2 = f_value(SequenceId.F2, n)
        f3 = f_value(SequenceId.F3, n)
        f5 = f_value(SequenceId.F5, n)
        assert f2 + f3 == f1
        assert f3 - f2 == f5
        if n >= 1:
            assert 3 * f_value(SequenceId.F4, n) == 2 * f5 - f3


def test_h_sum_matches_reindexed_form():
    for j in range(-2, 3):
        for k in range(-2, 3):
            for l in range(-2, 3):
                p = SumParams(j, k, l)
                for n in range(26):
                    if 3 * n + j < 0 or n < l:
                        continue
                    assert h_sum(p, n) == h_sum_reindexed(p, n)


def test_h_sum_domain():
    with pytest.raises(ValueError):
        h_sum(SumParams(-1, 1, 1), 0)


def test_h_gf_matches_sum_on_box():
    order = 9
    for j in range(-2, 3):
        for k in range(-2, 3):
            for l in range(-2, 3):
                p = SumParams(j, k, l)
                e = k - j - l
                ser = h_gf_series(p, order)
                for n in range(max(0, e), order + 1):
                    if 3 * n + j < 0:
                        continue
                    assert ser.coeff(n) == h_sum(p, n), (p, n)


def test_h_gf_order_check():
    # k - j - l = 2 means the expansion only speaks for n >= 2
    with pytest.raises(ValueError):
        h_gf_series(SumParams(0, 2, 0), 1)


@given(
    j=st.integers(-3, 3),
    k=st.integers(-3, 3),
    l=st.integers(-3, 3),
    n=st.integers(0, 18),
)
def test_h_sum_reindexing_property(j, k, l, n):
    p = SumParams(j, k, l)
    if 3 * n + j < 0 or n < l:
        return
    assert h_sum(p, n) == h_sum_reindexed(p, n)


def test_kummer_pair_examples():
    assert kummer_pair(0, 5) == (1, 1)
    assert kummer_pair(1, 1) == (4, 4)
    assert kummer_pair(2, 0) == (6, 6)
    assert kummer_pair(3, 2) == (140, 140)


def test_kummer_pair_rejects_negative():
    with pytest.raises(ValueError):
        kummer_pair(-1, 2)


def test_t_term_relations_spot():
    for n in range(0, 6):
        for i in range(-2, 2 * n + 4):
            assert t_term(2, n, i) + t_term(3, n, i) == t_term(1, n, i)
    for n in range(1, 6):
        for i in range(-1, 2 * n + 4):
            assert t_term(3, n, i) - t_term(2, n, i - 1) == t_term(5, n, i - 1)
            assert t_term(4, n, i) == Fraction(2, 3) * t_term(5, n, i) - Fraction(
                1, 3
            ) * t_term(3, n, i + 1)


def test_t4_relation_fails_at_n_zero():
    # the termwise identity for the fourth family needs n >= 1
    bad = [
        i
        for i in range(-1, 4)
        if t_term(4, 0, i)
        != Fraction(2, 3) * t_term(5, 0, i) - Fraction(1, 3) * t_term(3, 0, i + 1)
    ]
    assert bad


def test_beta_series():
    b = beta_series(10)
    assert b.coeffs[:4] == (0, 1, 2, 10)
    a = alpha_series(10)
    assert b == a - a * a


def test_factorial_terms():
    t1, t2 = n_closed_terms_factorial(3)
    assert t1 - t2 == n_closed(3)
    t1, t2 = n_closed_terms_factorial(6)
    assert t1 - t2 == 1162
    for n in range(1, 34):
        t1, t2 = n_closed_terms_factorial(n)
        assert t1 - t2 == n_closed(n)


IDENTITY_PARAMS = {
    IdentityId.E_HJKL: (0, 1, 0),
    IdentityId.E_A1: (1, 2),
    IdentityId.E_2A: (2,),
}


@pytest.mark.parametrize("ident", list(IdentityId))
def test_verify_identity_passes(ident):
    report = verify_identity(ident, IDENTITY_PARAMS.get(ident, ()), order=20)
    assert report.passed, (report.lhs, report.rhs, report.location)


@pytest.mark.parametrize("seq", F_IDS)
def test_verify_each_h_parameter_triple(seq):
    report = verify_identity(IdentityId.E_HJKL, F_PARAMS[seq], order=25)
    assert report.passed


def test_verify_identity_param_errors():
    with pytest.raises(ValueError):
        verify_identity(IdentityId.E_HJKL, (1, 2))
    with pytest.raises(ValueError):
        verify_identity(IdentityId.E_A1, ())
    with pytest.raises(ValueError):
        verify_identity(IdentityId.E_2A, (1, 2))
