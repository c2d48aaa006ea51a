import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from noncross.exact import binom, factorial, lucas_binom_mod_p, normalize

fractions = st.fractions(
    min_value=-20, max_value=20, max_denominator=6
)
small_ints = st.integers(min_value=-30, max_value=30)
small_nonneg = st.integers(min_value=0, max_value=30)


def test_binom_matches_math_comb_on_nonneg_ints():
    for n in range(12):
        for k in range(14):
            assert binom(n, k) == math.comb(n, k)


def test_binom_examples():
    assert binom(3, 2) == 3
    assert binom(-1, 0) == 1
    assert binom(-1, 3) == -1
    assert binom(Fraction(5, 2), 2) == Fraction(15, 8)
    assert binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom(7, -2) == 0
    assert binom(Fraction(-3, 2), -1) == 0


def test_binom_result_is_int_when_exact():
    # a Fraction with denominator 1 must come back as int
    v = binom(Fraction(6, 2), 2)
    assert isinstance(v, int) and v == 3


@given(q=fractions, k=small_nonneg)
def test_binom_pascal_recurrence(q, k):
    assert binom(q, k) == binom(q - 1, k) + binom(q - 1, k - 1)


@given(q=fractions, k=small_nonneg)
def test_binom_upper_negation(q, k):
    assert binom(q, k) == (-1) ** k * binom(k - q - 1, k)


@given(n=small_nonneg, k=small_ints)
def test_binom_symmetry_for_integer_upper(n, k):
    assert binom(n, k) == binom(n, n - k)


def test_normalize_collapses_integral_fractions():
    assert normalize(Fraction(4, 2)) == 2
    assert isinstance(normalize(Fraction(4, 2)), int)
    assert normalize(Fraction(1, 2)) == Fraction(1, 2)
    assert normalize(7) == 7


def test_factorial_is_stdlib():
    assert factorial(6) == 720
    assert factorial(0) == 1


def _pascal_mod(p, size):
    rows = [[1]]
    for _ in range(size):
        prev = rows[-1]
        row = [1]
        for i in range(1, len(prev)):
            row.append((prev[i - 1] + prev[i]) % p)
        row.append(1)
        rows.append(row)
    return rows


@pytest.mark.parametrize("p", [2, 3, 5])
def test_lucas_matches_pascal_triangle_to_500(p):
    rows = _pascal_mod(p, 500)
    for n in range(501):
        row = rows[n]
        assert [lucas_binom_mod_p(n, k, p) for k in range(n + 1)] == row


def test_lucas_large_arguments():
    for n, k in [(500, 123), (486, 243), (729, 364)]:
        assert lucas_binom_mod_p(n, k, 3) == math.comb(n, k) % 3


def test_lucas_zero_when_digit_exceeds():
    # 3 = 10 base 3 and 1 = 01, so C(3,1) = 3 = 0 mod 3
    assert lucas_binom_mod_p(3, 1, 3) == 0


def test_lucas_rejects_bad_arguments():
    with pytest.raises(ValueError):
        lucas_binom_mod_p(5, 2, 4)
    with pytest.raises(ValueError):
        lucas_binom_mod_p(5, 2, 1)
    with pytest.raises(ValueError):
        lucas_binom_mod_p(-1, 0, 3)
