"""Lagrange inversion as executable coefficient extraction.

For the unique f with f = x G(f), two classical statements:

  form 1:  [x^n] Phi(f) = (1/n) [x^(n-1)] Phi'(x) G(x)^n
  form 2:  [x^n] Psi(f) / (1 - f G'(f)/G(f)) = [x^n] Psi(x) G(x)^n

Form 2 holds for Laurent series Psi; here the only Laurent objects that
occur are a monomial prefactor x^shift times an ordinary series, so the
shift is carried as an explicit integer instead of a Laurent type.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Rational, normalize
from .report import CheckResult, failed, passed
from .series import (
    Series,
    compose,
    derivative,
    mul,
    pow_int,
    recip,
    solve_fixed_point,
)


def lagrange_form1(phi: Series, G: Series, n: int) -> Rational:
    """[x^n] Phi(f) for f = x G(f), without computing f."""
    if n < 1:
        raise ValueError("form 1 needs n >= 1")
    if G.coeffs[0] == 0:
        raise ValueError("G(0) must be nonzero")
    if phi.order < n or G.order < n:
        raise ValueError(f"operands must be known to order {n}")
    c = mul(derivative(phi), pow_int(G, n)).coeff(n - 1)
    return normalize(Fraction(c) / n)


def lagrange_form2(psi: Series, G: Series, n: int, shift: int = 0) -> Rational:
    """[x^n] of x^shift Psi(f) / (1 - f G'(f)/G(f)), via the right side.

    Returns [x^(n-shift)] Psi(x) G(x)^n. A target exponent below zero
    means the requested coefficient sits under the monomial prefactor and
    is genuinely 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if G.coeffs[0] == 0:
        raise ValueError("G(0) must be nonzero")
    target = n - shift
    if target < 0:
        return 0
    return mul(psi, pow_int(G, n)).coeff(target)


def verify_form2(psi: Series, G: Series, order: int) -> CheckResult:
    """Compare both sides of form 2 coefficientwise up to `order`.

    The left side composes at f = solve_fixed_point(G, order); G must be
    known one past `order` so that G' reaches it.
    """
    if G.coeffs[0] == 0:
        raise ValueError("G(0) must be nonzero")
    if G.order < order + 1 or psi.order < order:
        raise ValueError(f"need psi to order {order} and G to order {order + 1}")
    params = {"order": order}

    f = solve_fixed_point(G, max(order, 1)).truncate(order)
    g_at_f = compose(G.truncate(order), f)
    gp_at_f = compose(derivative(G), f)
    denom = Series.one(order) - mul(f, mul(gp_at_f, recip(g_at_f)))
    lhs = mul(compose(psi, f), recip(denom))

    g_power = Series.one(order)
    g_trunc = G.truncate(order)
    for n in range(order + 1):
        rhs_n = mul(psi, g_power).coeff(n)
        if lhs.coeff(n) != rhs_n:
            return failed(
                "lagrange-form2",
                params,
                lhs=lhs.coeff(n),
                rhs=rhs_n,
                location=f"x^{n}",
            )
        g_power = mul(g_power, g_trunc)
    return passed("lagrange-form2", params)
