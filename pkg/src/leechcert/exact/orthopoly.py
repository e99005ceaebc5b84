"""Gegenbauer and Krawtchouk polynomial families over the rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .polynomial import RationalPolynomial


@lru_cache(maxsize=None)
def gegenbauer(n: int, k: int) -> RationalPolynomial:
    """Degree-``k`` Gegenbauer polynomial for the sphere in dimension ``n``.

    Normalized so that ``G_k(1) = 1``. Built from the three-term recurrence
    ``(k+n-2) G_{k+1} = (2k+n-2) x G_k - k G_{k-1}``.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    if k == 0:
        return RationalPolynomial([1])
    if k == 1:
        return RationalPolynomial([0, 1])
    m = k - 1
    x = RationalPolynomial.x()
    num = x * gegenbauer(n, m) * Fraction(2 * m + n - 2) - gegenbauer(n, m - 1) * m
    return num / (m + n - 2)


def gegenbauer_expand(p: RationalPolynomial, n: int) -> list[Fraction]:
    """Coefficients ``f_k`` with ``p = sum_k f_k * gegenbauer(n, k)``."""
    if p.is_zero():
        return [Fraction(0)]
    rem = p
    out = [Fraction(0)] * (p.degree + 1)
    for k in range(p.degree, -1, -1):
        c = rem[k] / gegenbauer(n, k).lead
        out[k] = c
        if c:
            rem = rem - gegenbauer(n, k) * c
    assert rem.is_zero()
    return out


def gegenbauer_combination(coeffs, n: int) -> RationalPolynomial:
    out = RationalPolynomial()
    for k, c in enumerate(coeffs):
        if c:
            out = out + gegenbauer(n, k) * Fraction(c)
    return out


def _binom_poly(shift: int, sign: int, j: int) -> RationalPolynomial:
    # C(shift + sign*x, j) as a polynomial in x
    out = RationalPolynomial([1])
    for i in range(j):
        out = out * RationalPolynomial([shift - i, sign])
    return out / _fact(j)


def _fact(j: int) -> int:
    out = 1
    for i in range(2, j + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def krawtchouk(n: int, k: int) -> RationalPolynomial:
    """Binary Krawtchouk polynomial ``K_k(x; n)`` as a polynomial in ``x``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    out = RationalPolynomial()
    for j in range(k + 1):
        term = _binom_poly(0, 1, j) * _binom_poly(n, -1, k - j)
        out = out + (term if j % 2 == 0 else -term)
    return out


def krawtchouk_value(n: int, k: int, i: int) -> int:
    """``K_k(i; n)`` evaluated at an integer directly from binomials."""
    return sum((-1) ** j * comb(i, j) * comb(n - i, k - j) for j in range(k + 1))
