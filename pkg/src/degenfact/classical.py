"""Non-degenerate families: Stirling numbers, central factorials, central differences."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .arith import X, Poly
from .series import Series, egf_extract, exp_series, order_for

HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling numbers of the first kind, (x)_n = sum_k s(n,k) x^k."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    return stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> Fraction:
    """Classical Stirling numbers of the second kind."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def falling_factorial_poly(n: int) -> Poly:
    """x(x-1)...(x-n+1) as a polynomial in x."""
    out = Poly((1,), X)
    for j in range(n):
        out = out * Poly((-j, 1), X)
    return out


@lru_cache(maxsize=None)
def central_factorial_poly(n: int) -> Poly:
    """x^[n] = x (x + n/2 - 1)(x + n/2 - 2)...(x - n/2 + 1); x^[0] = 1."""
    if n == 0:
        return Poly((1,), X)
    out = Poly((0, 1), X)
    for j in range(1, n):
        out = out * Poly((Fraction(n, 2) - j, 1), X)
    return out


def central_first_kind(n: int, k: int) -> Fraction:
    """t(n,k): coefficient of x^k in x^[n]."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return Fraction(central_factorial_poly(n).coeff(k))


@lru_cache(maxsize=None)
def _central_power_series(k: int, order: int) -> Series:
    g = exp_series(HALF, order) - exp_series(-HALF, order)
    return (g ** k) / math.factorial(k)


def central_second_kind(n: int, k: int) -> Fraction:
    """T(n,k) read off the generating function (e^{t/2} - e^{-t/2})^k / k!."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return egf_extract(_central_power_series(k, order_for(n)), n)


@lru_cache(maxsize=None)
def central_second_kind_recurrence(n: int, k: int) -> Fraction:
    """T(n,k) from T(n,k) = T(n-2,k-2) + k^2/4 T(n-2,k).

    The recurrence only closes for n, k >= 2; the k <= 1 columns and the
    n <= 1 rows are seeded from the generating function.
    """
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    if n < 2 or k < 2:
        return central_second_kind(n, k)
    return central_second_kind_recurrence(n - 2, k - 2) + Fraction(k * k, 4) * central_second_kind_recurrence(n - 2, k)


@lru_cache(maxsize=None)
def central_second_kind_row_by_basis(n: int) -> tuple[Fraction, ...]:
    """Row n of T obtained by expanding x^n in the central factorial basis.

    Peels off the leading term of x^[k] (which is monic of degree k) from
    the top degree down.
    """
    rest = Poly.monomial(1, n, X)
    row = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        c = rest.coeff(k)
        row[k] = Fraction(c)
        if c:
            rest = rest - central_factorial_poly(k) * c
    assert rest.is_zero()
    return tuple(row)


def central_diff(p: Poly, k: int) -> Poly:
    """delta^k p = sum_l C(k,l) (-1)^(k-l) p(x + l - k/2)."""
    if k == 0:
        return p
    out = Poly((), p.var)
    for l in range(k + 1):
        c = math.comb(k, l) * (-1) ** (k - l)
        out = out + p.shift(Fraction(2 * l - k, 2)) * c
    return out


def central_diff_step(p: Poly) -> Poly:
    """One application of delta: p(x + 1/2) - p(x - 1/2)."""
    return p.shift(HALF) - p.shift(-HALF)


@lru_cache(maxsize=None)
def delta_power_monomial(k: int, m: int) -> Poly:
    """delta^k applied to x^m."""
    return central_diff(Poly.monomial(1, m, X), k)


def central_diff_reduction_check(k: int, m: int) -> bool:
    """delta^k x^{m+1} == (x + k/2) delta^k x^m + k delta^{k-1} (x - 1/2)^m."""
    x = Poly.gen(X)
    lhs = central_diff(Poly.monomial(1, m + 1, X), k)
    shifted = Poly.monomial(1, m, X).shift(-HALF)
    rhs = (x + Fraction(k, 2)) * central_diff(Poly.monomial(1, m, X), k) + central_diff(shifted, k - 1) * k
    return lhs == rhs
