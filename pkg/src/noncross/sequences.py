"""The concrete sequences and the identities relating them.

N_n counts connected noncrossing graphs on n vertices in convex position.
It is computed four independent ways: a direct binomial sum divided by
n - 1, a coefficient extraction from a rational function, the generating
function 1/(1 - alpha) where alpha = x/((1-alpha)(1-2alpha)), and a
closed form in half-integer binomials.

The auxiliary sums f1..f5 are instances of

    h_{j,k,l}(n) = sum_i C(3n+j, n+j-k+l-i) C(n-l+i, i)

with (j,k,l) = (1,1,0), (0,1,0), (0,0,0), (-1,1,1), (0,1,1). Each has a
sum form, a generating function rational in alpha, and a closed form, and
the three routes must agree everywhere.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exact import Rational, binom, factorial, normalize
from .report import CheckResult, failed, passed
from .series import (
    Series,
    linear_combine,
    mul,
    pow_int,
    recip,
    solve_fixed_point,
    sqrt_unit,
)


class SumParams(NamedTuple):
    """The integer triple (j, k, l) selecting one member of the h family."""

    j: int
    k: int
    l: int


class SequenceId(str, enum.Enum):
    N = "N"
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    F5 = "f5"


class IdentityId(str, enum.Enum):
    E_N3 = "e-n3"
    E_HJKL = "e-hjkl"
    E_F1TO5_RATIONAL = "e-f1to5"
    E_A1 = "e-a1"
    E_2A = "e-2a"
    E_MH = "e-mh"
    FACT_ODD = "fact-odd"
    FACT_EVEN = "fact-even"
    KUMMER = "kummer"
    T_RELATIONS = "t-relations"


F_PARAMS: dict[SequenceId, SumParams] = {
    SequenceId.F1: SumParams(1, 1, 0),
    SequenceId.F2: SumParams(0, 1, 0),
    SequenceId.F3: SumParams(0, 0, 0),
    SequenceId.F4: SumParams(-1, 1, 1),
    SequenceId.F5: SumParams(0, 1, 1),
}

F_IDS = (SequenceId.F1, SequenceId.F2, SequenceId.F3, SequenceId.F4, SequenceId.F5)


def _exact_int(value: Rational, what: str) -> int:
    value = normalize(value)
    if not isinstance(value, int):
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value


def g_alpha(order: int) -> Series:
    """1/((1-x)(1-2x)), the generator whose fixed point is alpha."""
    return Series([2 ** (t + 1) - 1 for t in range(order + 1)])


# alpha is the hot series: solved once at the largest order requested so
# far, then sliced. Coefficients are ints, which keeps the solve fast.
_alpha_master = Series([0])


def alpha_series(order: int) -> Series:
    """alpha = x/((1-alpha)(1-2alpha)) = x + 3x^2 + 16x^3 + ..."""
    global _alpha_master
    if order > _alpha_master.order:
        _alpha_master = solve_fixed_point(g_alpha(order), order)
    return _alpha_master.truncate(order)


def _core_denominator(a: Series) -> Series:
    """1 - 6 alpha + 6 alpha^2, the common denominator of the gf forms."""
    a2 = mul(a, a)
    out = [1 - 6 * a.coeffs[0] + 6 * a2.coeffs[0]]
    out += [-6 * a.coeffs[i] + 6 * a2.coeffs[i] for i in range(1, a.order + 1)]
    return Series(out)


def n_direct(n: int) -> int:
    """N_n as a binomial sum divided by n - 1; defined for n >= 2."""
    if n < 2:
        raise ValueError("the direct sum is defined for n >= 2")
    total = 0
    for i in range(n - 1, 2 * n - 2):
        total += binom(3 * n - 3, n + i) * binom(i - 1, i - n + 1)
    q, r = divmod(total, n - 1)
    if r:
        raise ArithmeticError(f"direct sum {total} is not divisible by {n - 1} at n={n}")
    return q


def n_lemma(n: int) -> int:
    """N_{n+1} as (1/n) [x^(n-1)] (1-x)^-(n+2) (1-2x)^-n; n >= 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    order = n - 1
    den = mul(
        pow_int(Series.poly([1, -1], order), n + 2),
        pow_int(Series.poly([1, -2], order), n),
    )
    c = recip(den).coeff(order)
    return _exact_int(Fraction(c) / n, f"n_lemma({n})")


def n_gf_series(order: int) -> Series:
    """1/(1 - alpha): coefficient n is N_{n+1}."""
    a = alpha_series(order)
    return recip(Series.one(order) - a)


def _closed_form_terms(n: int) -> tuple[Rational, Rational]:
    t1 = normalize(Fraction(2 ** (2 * n - 1), n) * binom(Fraction(3 * n - 4, 2), n - 1))
    t2 = normalize(Fraction(2 ** (2 * n - 2), n) * binom(Fraction(3 * n - 3, 2), n - 1))
    return t1, t2


def n_closed(n: int) -> int:
    """N_n from the closed form in half-integer binomials; n >= 1.

    N_n = (2^(2n-1)/n) C(3n/2 - 2, n-1) - (2^(2n-2)/n) C(3n/2 - 3/2, n-1).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    t1, t2 = _closed_form_terms(n)
    return _exact_int(Fraction(t1) - Fraction(t2), f"n_closed({n})")


def _factorial_form(n: int) -> Rational:
    """The factorial rewriting of the dominant term of the closed form."""
    if n % 2:
        m = (n - 1) // 2
        num = 2 * factorial(m) * factorial(6 * m)
        den = factorial(2 * m) * factorial(2 * m + 1) * factorial(3 * m)
    else:
        m = (n - 2) // 2
        num = 6 * factorial(m) * factorial(6 * m + 1)
        den = factorial(2 * m) * factorial(2 * m + 2) * factorial(3 * m)
    return normalize(Fraction(num, den))


def n_closed_terms_factorial(n: int) -> tuple[Rational, Rational]:
    """Both closed-form terms, cross-checked against factorial forms.

    For odd n = 2m+1 the first term equals
    2 m! (6m)! / ((2m)! (2m+1)! (3m)!); for even n = 2m+2 the second
    equals 6 m! (6m+1)! / ((2m)! (2m+2)! (3m)!).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    t1, t2 = _closed_form_terms(n)
    expected = _factorial_form(n)
    got = t1 if n % 2 else t2
    if got != expected:
        raise ArithmeticError(
            f"factorial form mismatch at n={n}: term={got}, factorial form={expected}"
        )
    return t1, t2


def h_sum(p: SumParams, n: int) -> int:
    """h_{j,k,l}(n) as the raw double-binomial sum; needs 3n + j >= 0."""
    j, k, l = p
    if 3 * n + j < 0:
        raise ValueError(f"h sum needs 3n + j >= 0, got n={n}, j={j}")
    total = 0
    for i in range(0, n + j - k + l + 1):
        total += binom(3 * n + j, n + j - k + l - i) * binom(n - l + i, i)
    return total


def h_sum_reindexed(p: SumParams, n: int) -> int:
    """The same sum with index shifted by n - l; needs n >= l as well."""
    j, k, l = p
    if 3 * n + j < 0 or n < l:
        raise ValueError(f"reindexed h sum needs 3n + j >= 0 and n >= l at n={n}")
    total = 0
    for i in range(n - l, 2 * n + j - k + 1):
        total += binom(3 * n + j, n + i + k) * binom(i, n - l)
    return total


def h_gf_series(p: SumParams, order: int) -> Series:
    """The rational form (1-2a)^l a^(k-j-l) / ((1-6a+6a^2)(1-a)^(k-1)).

    Coefficient n agrees with h_sum(p, n) for n >= k - j - l. When the
    exponent e = k - j - l is negative, a^e = x^e (a/x)^e is Laurent; the
    unit part (a/x)^e is expanded at order + |e| and the result shifted
    down, dropping the negative-exponent coefficients, which lie outside
    the claimed range.
    """
    j, k, l = p
    e = k - j - l
    if order < max(0, e):
        raise ValueError(f"order {order} cannot hold the leading term x^{e}")
    if e >= 0:
        a = alpha_series(order)
        one = Series.one(order)
        num = mul(pow_int(one - a.scale(2), l), pow_int(a, e))
        den = mul(_core_denominator(a), pow_int(one - a, k - 1))
        return mul(num, recip(den))
    m = -e
    big = order + m
    a_ext = alpha_series(big + 1)
    unit = Series(a_ext.coeffs[1 : big + 2])
    a = a_ext.truncate(big)
    one = Series.one(big)
    num = mul(pow_int(one - a.scale(2), l), pow_int(unit, e))
    den = mul(_core_denominator(a), pow_int(one - a, k - 1))
    b = mul(num, recip(den))
    return Series(b.coeffs[m : m + order + 1])


def _f_closed(seq: SequenceId, n: int) -> int:
    b_whole = binom(Fraction(3 * n, 2), n)
    b_half = binom(Fraction(3 * n - 1, 2), n)
    two = Fraction(2)
    if seq == SequenceId.F1:
        v = two ** (2 * n) * b_whole
    elif seq == SequenceId.F2:
        v = two ** (2 * n - 1) * (Fraction(b_whole) - b_half)
    elif seq == SequenceId.F3:
        v = two ** (2 * n - 1) * (Fraction(b_whole) + b_half)
    elif seq == SequenceId.F4:
        v = -(two ** (2 * n - 1)) / 3 * b_whole + two ** (2 * n - 1) * b_half
    else:
        v = two ** (2 * n) * b_half
    return _exact_int(v, f"{seq.value}({n}) closed form")


def f_value(seq: SequenceId, n: int, method: str = "closed") -> int:
    """One of f1..f5 at n by the requested route: sum, gf, or closed.

    The three routes agree on their common domain; the agreement itself
    is what the verification suites sweep. f4(0) = 0 and f5(0) = 1 are
    the defining side conventions, and the closed form of f4 starts at
    n = 1.
    """
    if seq == SequenceId.N:
        raise ValueError("N has its own four routes; see the n_* functions")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method not in ("sum", "gf", "closed"):
        raise ValueError(f"unknown method {method!r}")
    p = F_PARAMS[seq]
    if seq == SequenceId.F4 and n == 0:
        if method == "closed":
            raise ValueError("closed form of f4 requires n >= 1")
        if method == "sum":
            return 0
    if seq == SequenceId.F5 and n == 0 and method == "sum":
        return 1
    if method == "sum":
        return h_sum(p, n)
    if method == "gf":
        order = max(n, p.k - p.j - p.l, 0)
        return _exact_int(h_gf_series(p, order).coeff(n), f"{seq.value}({n}) gf coefficient")
    return _f_closed(seq, n)


def _kummer_sides(n: int, a: int) -> tuple[int, Rational]:
    lhs = 0
    for k in range(n + 1):
        lhs += binom(2 * n + a, n - k) * binom(a + k - 1, k)
    rhs = normalize(2 ** (2 * n) * binom(Fraction(2 * n + a - 1, 2), n))
    return lhs, rhs


def kummer_pair(n: int, a: int) -> tuple[int, Rational]:
    """Both sides of sum_k C(2n+a, n-k) C(a+k-1, k) = 2^(2n) C(a/2+n-1/2, n).

    Returns (lhs, rhs) and raises if they differ.
    """
    if n < 0 or a < 0:
        raise ValueError("n and a must be nonnegative")
    lhs, rhs = _kummer_sides(n, a)
    if lhs != rhs:
        raise ArithmeticError(f"kummer identity fails at n={n}, a={a}: {lhs} != {rhs}")
    return lhs, rhs


def t_term(m: int, n: int, i: int) -> Rational:
    """The i-th term of the shifted sum for f_m.

    T1 = C(3n+1, n+i+1) C(i, n)    T2 = C(3n, n+i+1) C(i, n)
    T3 = C(3n, n+i) C(i, n)        T4 = C(3n-1, n+i+1) C(i, n-1)
    T5 = C(3n, n+i+1) C(i, n-1)
    """
    if m == 1:
        return binom(3 * n + 1, n + i + 1) * binom(i, n)
    if m == 2:
        return binom(3 * n, n + i + 1) * binom(i, n)
    if m == 3:
        return binom(3 * n, n + i) * binom(i, n)
    if m == 4:
        return binom(3 * n - 1, n + i + 1) * binom(i, n - 1)
    if m == 5:
        return binom(3 * n, n + i + 1) * binom(i, n - 1)
    raise ValueError(f"term family index must be 1..5, got {m}")


def beta_series(order: int) -> Series:
    """beta = x/sqrt(1-4 beta) = x + 2x^2 + 10x^3 + ...; equals alpha - alpha^2."""
    if order == 0:
        return Series([0])
    G = recip(sqrt_unit(Series.poly([1, -4], order)))
    b = solve_fixed_point(G, order)
    a = alpha_series(order)
    if b != a - mul(a, a):
        raise ArithmeticError("beta disagrees with alpha - alpha^2")
    return b


def _verify_e_n3(order: int) -> CheckResult:
    params = {"order": order}
    ser = n_gf_series(order)
    for m in range(order + 1):
        expect = 1 if m == 0 else n_direct(m + 1)
        if ser.coeff(m) != expect:
            return failed(IdentityId.E_N3.value, params, ser.coeff(m), expect, f"x^{m}")
    return passed(IdentityId.E_N3.value, params)


def _verify_e_hjkl(j: int, k: int, l: int, order: int) -> CheckResult:
    params = {"j": j, "k": k, "l": l, "order": order}
    p = SumParams(j, k, l)
    ser = h_gf_series(p, order)
    for n in range(max(0, k - j - l), order + 1):
        if 3 * n + j < 0:
            continue
        expect = h_sum(p, n)
        if ser.coeff(n) != expect:
            return failed(IdentityId.E_HJKL.value, params, ser.coeff(n), expect, f"n={n}")
    return passed(IdentityId.E_HJKL.value, params)


def _verify_e_f1to5(order: int) -> CheckResult:
    params = {"order": order}
    a = alpha_series(order)
    one = Series.one(order)
    d = recip(_core_denominator(a))
    numerators = {
        SequenceId.F1: one,
        SequenceId.F2: a,
        SequenceId.F3: one - a,
        SequenceId.F4: a - mul(a, a).scale(2),
        SequenceId.F5: one - a.scale(2),
    }
    forms = {seq: mul(num, d) for seq, num in numerators.items()}
    for seq, form in forms.items():
        for n in range(order + 1):
            expect = f_value(seq, n, "sum")
            if form.coeff(n) != expect:
                return failed(
                    IdentityId.E_F1TO5_RATIONAL.value,
                    params,
                    form.coeff(n),
                    expect,
                    f"{seq.value} n={n}",
                )
    # The forms also satisfy F4 = -(1/6) F1 + (1/2) F5 - 1/3.
    rel = linear_combine(Fraction(-1, 6), forms[SequenceId.F1], Fraction(1, 2), forms[SequenceId.F5])
    rel = rel - Series.poly([Fraction(1, 3)], order)
    if forms[SequenceId.F4] != rel:
        return failed(IdentityId.E_F1TO5_RATIONAL.value, params, location="F4 linear relation")
    return passed(IdentityId.E_F1TO5_RATIONAL.value, params)


def _verify_e_a1(r: int, i: int, order: int) -> CheckResult:
    params = {"r": r, "i": i, "order": order}
    a = alpha_series(order)
    one = Series.one(order)
    beta = a - mul(a, a)
    lhs = mul(
        mul(pow_int(one - a.scale(2), 2 * r), pow_int(beta, i)),
        recip(_core_denominator(a)),
    )
    for n in range(order + 1):
        rhs = normalize(
            Fraction(2) ** (2 * n - 2 * i) * binom(Fraction(3 * n, 2) - r - i, n - i)
        )
        if lhs.coeff(n) != rhs:
            return failed(IdentityId.E_A1.value, params, lhs.coeff(n), rhs, f"x^{n}")
    return passed(IdentityId.E_A1.value, params)


def _verify_e_2a(r: int, order: int) -> CheckResult:
    params = {"r": r, "order": order}
    a = alpha_series(order)
    one = Series.one(order)
    lhs = pow_int(one - a.scale(2), 2 * r)
    for n in range(order + 1):
        if n == 0:
            rhs: Rational = 1
        else:
            rhs = normalize(
                -(Fraction(2) ** (2 * n))
                * Fraction(r, n)
                * binom(Fraction(3 * n, 2) - r - 1, n - 1)
            )
        if lhs.coeff(n) != rhs:
            return failed(IdentityId.E_2A.value, params, lhs.coeff(n), rhs, f"x^{n}")
    return passed(IdentityId.E_2A.value, params)


def _verify_e_mh(n_max: int) -> CheckResult:
    params = {"n_max": n_max}
    for n in range(1, n_max + 1):
        expect = 1 if n == 1 else n_direct(n)
        got = n_closed(n)
        if got != expect:
            return failed(IdentityId.E_MH.value, params, got, expect, f"n={n}")
    return passed(IdentityId.E_MH.value, params)


def _verify_fact(ident: IdentityId, m_max: int) -> CheckResult:
    params = {"m_max": m_max}
    odd = ident == IdentityId.FACT_ODD
    for m in range(m_max + 1):
        n = 2 * m + 1 if odd else 2 * m + 2
        t1, t2 = _closed_form_terms(n)
        got = t1 if odd else t2
        expect = _factorial_form(n)
        if got != expect:
            return failed(ident.value, params, got, expect, f"m={m}")
        whole = 1 if n == 1 else n_direct(n)
        if Fraction(t1) - Fraction(t2) != whole:
            return failed(ident.value, params, t1 - t2, whole, f"m={m} difference")
    return passed(ident.value, params)


def _verify_kummer(n_max: int, a_max: int) -> CheckResult:
    params = {"n_max": n_max, "a_max": a_max}
    for n in range(n_max + 1):
        for a in range(a_max + 1):
            lhs, rhs = _kummer_sides(n, a)
            if lhs != rhs:
                return failed(IdentityId.KUMMER.value, params, lhs, rhs, f"n={n} a={a}")
    return passed(IdentityId.KUMMER.value, params)


def _verify_t_relations(n_min: int, n_max: int) -> CheckResult:
    params = {"n_min": n_min, "n_max": n_max}
    third = Fraction(1, 3)
    for n in range(max(n_min, 0), n_max + 1):
        for i in range(-2, 2 * n + 4):
            if t_term(2, n, i) + t_term(3, n, i) != t_term(1, n, i):
                return failed(IdentityId.T_RELATIONS.value, params, location=f"T2+T3=T1 n={n} i={i}")
            if n >= 1:
                if t_term(3, n, i) - t_term(2, n, i - 1) != t_term(5, n, i - 1):
                    return failed(
                        IdentityId.T_RELATIONS.value, params, location=f"T3-T2=T5 n={n} i={i}"
                    )
                want = 2 * third * t_term(5, n, i) - third * t_term(3, n, i + 1)
                if t_term(4, n, i) != want:
                    return failed(
                        IdentityId.T_RELATIONS.value, params, location=f"T4 relation n={n} i={i}"
                    )
        if n >= 1:
            vals = {seq: f_value(seq, n, "sum") for seq in F_IDS}
            if vals[SequenceId.F2] + vals[SequenceId.F3] != vals[SequenceId.F1]:
                return failed(IdentityId.T_RELATIONS.value, params, location=f"f2+f3=f1 n={n}")
            if vals[SequenceId.F3] - vals[SequenceId.F2] != vals[SequenceId.F5]:
                return failed(IdentityId.T_RELATIONS.value, params, location=f"f3-f2=f5 n={n}")
            if vals[SequenceId.F4] != 2 * third * vals[SequenceId.F5] - third * vals[SequenceId.F3]:
                return failed(IdentityId.T_RELATIONS.value, params, location=f"f4 relation n={n}")
    return passed(IdentityId.T_RELATIONS.value, params)


def verify_identity(
    ident: IdentityId, params: Sequence[int] = (), order: int = 30
) -> CheckResult:
    """Expand both sides of the named identity and report the comparison.

    params carries the identity-specific integers: (r, i) for e-a1, (r,)
    for e-2a, (j, k, l) for e-hjkl, (n_max,) or (n_max, a_max) or
    (n_min, n_max) for the termwise families. Missing entries fall back
    to the ranges the acceptance suite uses.
    """
    p = list(params)
    if ident == IdentityId.E_N3:
        return _verify_e_n3(order)
    if ident == IdentityId.E_HJKL:
        if len(p) != 3:
            raise ValueError("e-hjkl needs params (j, k, l)")
        return _verify_e_hjkl(p[0], p[1], p[2], order)
    if ident == IdentityId.E_F1TO5_RATIONAL:
        return _verify_e_f1to5(order)
    if ident == IdentityId.E_A1:
        if len(p) != 2:
            raise ValueError("e-a1 needs params (r, i)")
        return _verify_e_a1(p[0], p[1], order)
    if ident == IdentityId.E_2A:
        if len(p) != 1:
            raise ValueError("e-2a needs params (r,)")
        return _verify_e_2a(p[0], order)
    if ident == IdentityId.E_MH:
        return _verify_e_mh(p[0] if p else max(order, 1))
    if ident == IdentityId.FACT_ODD or ident == IdentityId.FACT_EVEN:
        return _verify_fact(ident, p[0] if p else 15)
    if ident == IdentityId.KUMMER:
        n_max = p[0] if p else 30
        a_max = p[1] if len(p) > 1 else 20
        return _verify_kummer(n_max, a_max)
    if ident == IdentityId.T_RELATIONS:
        n_min = p[0] if p else 0
        n_max = p[1] if len(p) > 1 else 12
        return _verify_t_relations(n_min, n_max)
    raise ValueError(f"unknown identity {ident!r}")
