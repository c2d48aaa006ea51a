"""Exact integer and rational arithmetic.

Generalized binomial coefficients C(q, k) for arbitrary rational q,
factorials, and binomials modulo a prime via base-p digit products.
Every value is exact; results with denominator 1 come back as plain ints.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = int | Fraction


def normalize(value: Rational) -> Rational:
    """Collapse a Fraction with denominator 1 to a plain int."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def binom(q: Rational, k: int) -> Rational:
    """C(q, k) = q (q-1) ... (q-k+1) / k! for any rational q.

    Negative k gives 0, matching the usual convention for out-of-range
    summation indices. C(q, 0) = 1 for every q, including q = -1.
    """
    if k < 0:
        return 0
    q = normalize(q)
    if isinstance(q, int) and q >= 0:
        return math.comb(q, k)
    num = Fraction(1)
    for t in range(k):
        num *= Fraction(q) - t
    return normalize(num / math.factorial(k))


factorial = math.factorial


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def lucas_binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p as the product of digit binomials of n, k in base p."""
    if not _is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    out = 1
    while n or k:
        nd, n = n % p, n // p
        kd, k = k % p, k // p
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
    return out
