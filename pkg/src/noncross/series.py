"""Truncated formal power series with exact coefficients.

A Series stores the coefficients c[0..order] of sum c_i x^i. Coefficients
above `order` are unknown, not zero: binary operations truncate to the
smaller operand order, and reading past the order is an error rather than
a silent 0. SeriesMod3 is the same structure over Z/3.

Coefficients are ints or Fractions; Fractions that reduce to integers are
stored as ints so that integer-only pipelines (which dominate here) stay
on fast native arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Rational, normalize


def _checked(c: object) -> Rational:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return normalize(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Series:
    """Formal power series truncated at a known order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Rational]):
        cs = tuple(_checked(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: tuple[Rational, ...] = cs
        self.order: int = len(cs) - 1

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1] + [0] * order)

    @classmethod
    def x(cls, order: int) -> Series:
        if order < 1:
            raise ValueError("x needs order >= 1")
        return cls([0, 1] + [0] * (order - 1))

    @classmethod
    def poly(cls, coeffs: Sequence[Rational], order: int) -> Series:
        """The polynomial sum coeffs[i] x^i viewed as a series to `order`.

        Higher-degree terms are dropped: the result represents the
        polynomial only up to the requested truncation.
        """
        cs = list(coeffs[: order + 1])
        cs += [0] * (order + 1 - len(cs))
        return cls(cs)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def coeff(self, n: int) -> Rational:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} outside known range 0..{self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: Series) -> Series:
        order = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)])

    def __sub__(self, other: Series) -> Series:
        order = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(order + 1)])

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs])

    def __mul__(self, other: Series) -> Series:
        return mul(self, other)

    def scale(self, c: Rational) -> Series:
        c = _checked(c)
        return Series([c * a for a in self.coeffs])

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"Series([{head}{tail}], order={self.order})"


def _mul_lists(p: Sequence, q: Sequence, order: int) -> list:
    """Cauchy product of coefficient lists truncated at `order`.

    Skips zero coefficients of p; with series that fill in from low
    degrees (fixed-point iterates) this keeps early passes cheap.
    """
    out = [0] * (order + 1)
    for i, pi in enumerate(p):
        if i > order:
            break
        if pi == 0:
            continue
        for j, qj in enumerate(q[: order - i + 1]):
            if qj:
                out[i + j] += pi * qj
    return out


def _recip_list(p: Sequence, order: int) -> list:
    c0 = p[0]
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    inv0 = normalize(Fraction(1) / c0)
    out = [0] * (order + 1)
    out[0] = inv0
    for m in range(1, order + 1):
        acc = 0
        top = min(m, len(p) - 1)
        for k in range(1, top + 1):
            pk = p[k]
            if pk:
                acc += pk * out[m - k]
        out[m] = normalize(-inv0 * acc) if acc else 0
    return out


def linear_combine(a: Rational, s: Series, b: Rational, t: Series) -> Series:
    """a*s + b*t, truncated to the smaller operand order."""
    a = _checked(a)
    b = _checked(b)
    order = min(s.order, t.order)
    return Series([a * s.coeffs[i] + b * t.coeffs[i] for i in range(order + 1)])


def mul(s: Series, t: Series) -> Series:
    order = min(s.order, t.order)
    return Series(_mul_lists(s.coeffs, t.coeffs, order))


def recip(s: Series) -> Series:
    """Multiplicative inverse; requires a nonzero constant term."""
    return Series(_recip_list(s.coeffs, s.order))


def compose(outer: Series, inner: Series) -> Series:
    """outer(inner(x)) by Horner accumulation; inner must vanish at 0."""
    if inner.coeffs[0] != 0:
        raise ValueError("composition requires inner constant term 0")
    order = min(outer.order, inner.order)
    g = outer.coeffs
    fc = inner.coeffs[: order + 1]
    h = [g[order]] + [0] * order
    for k in range(order - 1, -1, -1):
        h = _mul_lists(h, fc, order)
        h[0] += g[k]
    return Series(h)


def derivative(s: Series) -> Series:
    """Termwise d/dx; the result order drops by one."""
    if s.order == 0:
        raise ValueError("derivative of an order-0 series has no known coefficients")
    return Series([(i + 1) * s.coeffs[i + 1] for i in range(s.order)])


def sqrt_unit(s: Series) -> Series:
    """The square root with constant term 1, by Newton iteration.

    Each step t <- (t + s/t)/2 doubles the number of correct coefficients.
    """
    if s.coeffs[0] != 1:
        raise ValueError("sqrt_unit requires constant term exactly 1")
    t = [1]
    known = 1
    while known <= s.order:
        known = min(2 * known, s.order + 1)
        d = known - 1
        quot = _mul_lists(s.coeffs[:known], _recip_list(t, d), d)
        t = [normalize(Fraction(t[i] + quot[i], 2)) if i < len(t) else normalize(Fraction(quot[i], 2)) for i in range(known)]
    return Series(t)


def pow_int(s: Series, m: int) -> Series:
    """s**m by repeated squaring; negative m goes through recip."""
    if m < 0:
        return pow_int(recip(s), -m)
    out = [1] + [0] * s.order
    base = list(s.coeffs)
    while m:
        if m & 1:
            out = _mul_lists(out, base, s.order)
        m >>= 1
        if m:
            base = _mul_lists(base, base, s.order)
    return Series(out)


def solve_fixed_point(G: Series, order: int) -> Series:
    """The unique f with f(0) = 0 and f = x G(f), to the given order.

    Simple iteration f <- x G(f): pass p determines coefficient p, so
    `order` passes suffice. Pass p composes only up to degree p-1, since
    higher coefficients of the iterate are still provisional.
    """
    if G.coeffs[0] == 0:
        raise ValueError("G(0) must be nonzero for a unique fixed point")
    if order < 1:
        raise ValueError("order must be at least 1")
    if G.order < order - 1:
        raise ValueError(f"G known to order {G.order}, need {order - 1}")
    g = G.coeffs
    f = [0] * (order + 1)
    for p in range(1, order + 1):
        d = p - 1
        h = [g[d]] + [0] * d
        for k in range(d - 1, -1, -1):
            h = _mul_lists(h, f, d)
            h[0] += g[k]
        for i in range(d + 1):
            f[i + 1] = h[i]
    return Series(f)


def coeff(s: Series, n: int) -> Rational:
    """Coefficient of x^n; reading beyond the order is an error."""
    return s.coeff(n)


class SeriesMod3:
    """Truncated series over Z/3."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(c % 3 for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: tuple[int, ...] = cs
        self.order: int = len(cs) - 1

    @classmethod
    def zero(cls, order: int) -> SeriesMod3:
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> SeriesMod3:
        return cls([1] + [0] * order)

    def coeff(self, n: int) -> int:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} outside known range 0..{self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> SeriesMod3:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return SeriesMod3(self.coeffs[: order + 1])

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesMod3):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: SeriesMod3) -> SeriesMod3:
        order = min(self.order, other.order)
        return SeriesMod3([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)])

    def __mul__(self, other: SeriesMod3) -> SeriesMod3:
        # The series here are sparse (F has one term per power of 3), so
        # skipping zeros matters more than anything else.
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, ci in enumerate(self.coeffs[: order + 1]):
            if ci:
                for j, cj in enumerate(other.coeffs[: order - i + 1]):
                    if cj:
                        out[i + j] = (out[i + j] + ci * cj) % 3
        return SeriesMod3(out)

    def scale(self, c: int) -> SeriesMod3:
        return SeriesMod3([c * a for a in self.coeffs])

    def pow(self, e: int) -> SeriesMod3:
        if e < 0:
            raise ValueError("negative powers are not defined here")
        out = SeriesMod3.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"SeriesMod3(support={self.support()}, order={self.order})"


def reduce_mod3(s: Series) -> SeriesMod3:
    """Coefficientwise reduction; every coefficient must be an integer."""
    out = []
    for i, c in enumerate(s.coeffs):
        if not isinstance(c, int):
            raise ValueError(f"coefficient of x^{i} is {c}, not an integer")
        out.append(c % 3)
    return SeriesMod3(out)
