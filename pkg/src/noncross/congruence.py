"""Everything modulo 3.

N_n mod 3 depends only on the base-3 digits of n: the residue is 1 when n
is a power of 3 or twice one, 2 when n is a sum of two distinct powers of
3, and 0 otherwise. On the series side, sum N_n x^n is congruent to
F + F^2 where F = sum x^(3^m), because alpha reduces to F mod 3. The
routines here compute both sides of each such statement independently and
refuse to return anything when they disagree.
"""

from __future__ import annotations

import enum

from .exact import lucas_binom_mod_p
from .report import CheckResult, failed, passed
from .sequences import (
    F_PARAMS,
    SequenceId,
    SumParams,
    alpha_series,
    h_gf_series,
)
from .series import SeriesMod3, reduce_mod3


class TernaryClass(str, enum.Enum):
    POWER_OR_TWICE_POWER = "power-or-twice-power"
    SUM_TWO_DISTINCT_POWERS = "sum-two-distinct-powers"
    OTHER = "other"


def ternary_classify(n: int) -> TernaryClass:
    """Classify n by its base-3 digit pattern."""
    if n < 1:
        raise ValueError("n must be positive")
    digits = []
    while n:
        digits.append(n % 3)
        n //= 3
    nonzero = [d for d in digits if d]
    if len(nonzero) == 1:
        return TernaryClass.POWER_OR_TWICE_POWER
    if len(nonzero) == 2 and nonzero[0] == 1 and nonzero[1] == 1:
        return TernaryClass.SUM_TWO_DISTINCT_POWERS
    return TernaryClass.OTHER


_RESIDUE = {
    TernaryClass.POWER_OR_TWICE_POWER: 1,
    TernaryClass.SUM_TWO_DISTINCT_POWERS: 2,
    TernaryClass.OTHER: 0,
}


def predicted_residue(n: int) -> int:
    """N_n mod 3 as dictated by the classification of n."""
    return _RESIDUE[ternary_classify(n)]


def f_cap_series(order: int) -> SeriesMod3:
    """F = sum x^(3^m), truncated at `order`."""
    coeffs = [0] * (order + 1)
    p = 1
    while p <= order:
        coeffs[p] = 1
        p *= 3
    return SeriesMod3(coeffs)


def n_mod3_series(order: int) -> SeriesMod3:
    """F + F^2; coefficient n is N_n mod 3."""
    f = f_cap_series(order)
    return f + f * f


def alpha_mod3_series(order: int) -> SeriesMod3:
    """alpha mod 3, which collapses to F.

    Computed twice: by reducing the exact fixed-point solution, and as
    f_cap_series directly. A disagreement is an internal error.
    """
    expected = f_cap_series(order)
    actual = reduce_mod3(alpha_series(order))
    if actual != expected:
        raise ArithmeticError(f"alpha mod 3 does not equal F at order {order}")
    return expected


# Residues of the five f generating functions: each is a polynomial in F.
# 1 - 6a + 6a^2 is congruent to 1, so only the numerators survive, with
# alpha replaced by F and -1 by 2.
def _residue_polynomial(seq: SequenceId, order: int) -> SeriesMod3:
    f = f_cap_series(order)
    one = SeriesMod3.one(order)
    if seq == SequenceId.F1:
        return one
    if seq == SequenceId.F2:
        return f
    if seq == SequenceId.F3:
        return one + f.scale(2)
    if seq == SequenceId.F4:
        return f + f * f
    if seq == SequenceId.F5:
        return one + f
    raise ValueError(f"no residue polynomial for {seq!r}")


def f_mod3_series(seq: SequenceId, order: int) -> SeriesMod3:
    """f_m mod 3 as a polynomial in F, checked against the exact series."""
    if seq == SequenceId.N:
        raise ValueError("N mod 3 is n_mod3_series")
    predicted = _residue_polynomial(seq, order)
    actual = reduce_mod3(h_gf_series(F_PARAMS[seq], order))
    if actual != predicted:
        bad = next(i for i in range(order + 1) if actual.coeffs[i] != predicted.coeffs[i])
        raise ArithmeticError(
            f"{seq.value} mod 3 disagrees with its F polynomial at x^{bad}"
        )
    return predicted


def h_mod3_series(p: SumParams, order: int) -> SeriesMod3:
    """h_{j,k,l} mod 3 as (1+F)^l (1-F)^(1-k) F^(k-j-l).

    Supported for the parameter triples whose three exponents are all
    nonnegative, which covers the five f instances.
    """
    j, k, l = p
    e = k - j - l
    if l < 0 or 1 - k < 0 or e < 0:
        raise ValueError(f"negative exponent for params {p}; not supported mod 3")
    f = f_cap_series(order)
    one = SeriesMod3.one(order)
    predicted = (one + f).pow(l) * (one + f.scale(2)).pow(1 - k) * f.pow(e)
    actual = reduce_mod3(h_gf_series(p, order))
    if actual != predicted:
        bad = next(i for i in range(order + 1) if actual.coeffs[i] != predicted.coeffs[i])
        raise ArithmeticError(f"h{p} mod 3 disagrees with its F form at x^{bad}")
    return predicted


def n_mod3_via_lucas(n: int) -> int | None:
    """N_n mod 3 from the direct sum with digitwise binomials.

    The direct sum carries a 1/(n-1) factor, so this route only exists
    when 3 does not divide n - 1; those n return None and are covered by
    the closed form and the series congruence instead.
    """
    if n < 2:
        raise ValueError("the direct sum starts at n = 2")
    r = (n - 1) % 3
    if r == 0:
        return None
    acc = 0
    for i in range(n - 1, 2 * n - 2):
        acc += lucas_binom_mod_p(3 * n - 3, n + i, 3) * lucas_binom_mod_p(i - 1, i - n + 1, 3)
    inv = 1 if r == 1 else 2
    return acc * inv % 3
