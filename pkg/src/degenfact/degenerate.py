"""Degenerate families built from (1 + lam t)^(a/lam).

Every function takes a :class:`LambdaMode`.  In symbolic mode the
arithmetic runs in Q[lam]; in concrete mode lam is a fixed rational and the
arithmetic runs in Q.  Either way results come back normalized:

* numbers are polynomials in ``lam`` (constants in concrete mode);
* polynomial-valued families with symbolic ``x`` are polynomials in ``x``
  whose coefficients are polynomials in ``lam``.  With a rational ``x`` they
  collapse to polynomials in ``lam``.

The generating-function definitions are the primary route.  The other
routes (``t2_poly_recursive``, ``t2_explicit``, ``t2_via_delta``,
``euler_via_t2``, ``t2_even_convolution``) exist so that they can be checked
against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from .arith import LAM, X, Poly, UsageError, as_lambda_poly, format_rational, parse_rational
from .classical import HALF, delta_power_monomial, stirling1
from .series import (
    Series,
    deformed_exp,
    deformed_falling,
    egf_extract,
    gen_binomial,
    order_for,
    series_rat_pow,
    series_reciprocal,
    series_revert,
)

SYMBOLIC_X = "symbolic"
XSpec = Union[str, Fraction, int]


@dataclass(frozen=True)
class LambdaMode:
    """``value is None`` means symbolic lam."""

    value: Fraction | None = None

    @classmethod
    def symbolic(cls) -> "LambdaMode":
        return cls(None)

    @classmethod
    def concrete(cls, v: Fraction | int | str) -> "LambdaMode":
        if isinstance(v, str):
            v = parse_rational(v)
        return cls(Fraction(v))

    @classmethod
    def parse(cls, text: str) -> "LambdaMode":
        if text.strip().lower() == "symbolic":
            return cls(None)
        return cls.concrete(text)

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    @property
    def lam(self) -> Any:
        """The ring element standing for lam."""
        return Poly.gen(LAM) if self.value is None else self.value

    def negated(self) -> "LambdaMode":
        return self if self.value is None else LambdaMode(-self.value)

    def __str__(self) -> str:
        return "symbolic" if self.value is None else format_rational(self.value)


SYMBOLIC = LambdaMode.symbolic()


def _x_elem(x: XSpec) -> Any:
    if isinstance(x, str):
        if x != SYMBOLIC_X:
            raise UsageError(f"x must be 'symbolic' or a rational, got {x!r}")
        return Poly.gen(X)
    return Fraction(x)


def parse_x(text: str) -> XSpec:
    if text.strip().lower() == SYMBOLIC_X:
        return SYMBOLIC_X
    return parse_rational(text)


def negate_lambda(v: Any) -> Any:
    """Substitute lam -> -lam in a normalized value."""
    if isinstance(v, Poly):
        return as_lambda_poly(v.subs(LAM, -Poly.gen(LAM)))
    return v


# -- lam-falling factorials and binomials ---------------------------------


def lambda_falling(a: Any, n: int, mode: LambdaMode = SYMBOLIC) -> Poly:
    """(a)_{n,lam} = a(a - lam)...(a - (n-1) lam); ``a`` may be "symbolic" for x."""
    if isinstance(a, str):
        a = _x_elem(a)
    return as_lambda_poly(deformed_falling(a, mode.lam, n))


def lambda_binom(a: Any, l: int, mode: LambdaMode = SYMBOLIC) -> Poly:
    return lambda_falling(a, l, mode) / math.factorial(l)


# -- generating-function series (cached per order) ------------------------


@lru_cache(maxsize=None)
def _dexp(a: Any, mode: LambdaMode, order: int) -> Series:
    return deformed_exp(a, mode.lam, order)


@lru_cache(maxsize=None)
def central_map(mode: LambdaMode, order: int) -> Series:
    """(1 + lam t)^{1/(2 lam)} - (1 + lam t)^{-1/(2 lam)}."""
    return _dexp(HALF, mode, order) - _dexp(-HALF, mode, order)


@lru_cache(maxsize=None)
def _central_power(k: int, mode: LambdaMode, order: int) -> Series:
    # g^k / k!, built from the previous power so that tables share the work
    if k == 0:
        return Series.one(order)
    return _central_power(k - 1, mode, order) * central_map(mode, order) / k


@lru_cache(maxsize=None)
def _stirling2_power(k: int, mode: LambdaMode, order: int) -> Series:
    if k == 0:
        return Series.one(order)
    u = _dexp(Fraction(1), mode, order) - 1
    return _stirling2_power(k - 1, mode, order) * u / k


@lru_cache(maxsize=None)
def inverse_central_map(mode: LambdaMode, order: int) -> Series:
    """Compositional inverse of :func:`central_map`."""
    return series_revert(central_map(mode, order))


@lru_cache(maxsize=None)
def _t1_power(k: int, mode: LambdaMode, order: int) -> Series:
    if k == 0:
        return Series.one(order)
    return _t1_power(k - 1, mode, order) * inverse_central_map(mode, order) / k


@lru_cache(maxsize=None)
def _t2_poly_series(k: int, x: XSpec, mode: LambdaMode, order: int) -> Series:
    return _central_power(k, mode, order) * _dexp(_x_elem(x), mode, order)


@lru_cache(maxsize=None)
def _euler_series(r: Fraction, x: XSpec, mode: LambdaMode, order: int) -> Series:
    base = (_dexp(Fraction(1), mode, order) - 1) / 2 + 1
    return series_rat_pow(base, -r) * _dexp(_x_elem(x), mode, order)


def _extract(series_fn, n: int, *args) -> Any:
    return as_lambda_poly(egf_extract(series_fn(*args, order_for(n)), n))


# -- families --------------------------------------------------------------


def stirling2_lambda(n: int, k: int, mode: LambdaMode = SYMBOLIC) -> Poly:
    """lam-Stirling numbers of the second kind."""
    if n < 0 or k < 0 or k > n:
        return Poly()
    return _extract(_stirling2_power, n, k, mode)


def t2_number(n: int, k: int, mode: LambdaMode = SYMBOLIC) -> Poly:
    """Degenerate central factorial numbers of the second kind."""
    if n < 0 or k < 0 or k > n:
        return Poly()
    return _extract(_central_power, n, k, mode)


def t2_poly(n: int, k: int, x: XSpec = SYMBOLIC_X, mode: LambdaMode = SYMBOLIC) -> Poly:
    """Degenerate central factorial polynomials of the second kind, T2(n,k|x)."""
    if n < 0 or k < 0 or k > n:
        return Poly((), X if x == SYMBOLIC_X else LAM)
    return _extract(_t2_poly_series, n, k, x, mode)


def t1_degenerate(n: int, k: int, mode: LambdaMode = SYMBOLIC) -> Poly:
    """Degenerate central factorial numbers of the first kind.

    Read off the k-th power of the compositional inverse of the central map.
    """
    if n < 0 or k < 0 or k > n:
        return Poly()
    return _extract(_t1_power, n, k, mode)


def degenerate_euler(n: int, r: Fraction | int = 1, x: XSpec = SYMBOLIC_X, mode: LambdaMode = SYMBOLIC) -> Poly:
    """Higher-order degenerate Euler polynomials for rational order r."""
    if n < 0:
        raise UsageError("n must be nonnegative")
    return _extract(_euler_series, n, Fraction(r), x, mode)


def euler_carlitz(n: int, x: XSpec = SYMBOLIC_X, mode: LambdaMode = SYMBOLIC) -> Poly:
    """Order-one degenerate Euler polynomial from 2 / ((1+lam t)^{1/lam} + 1) directly."""
    order = order_for(n)
    denom = _dexp(Fraction(1), mode, order) + 1
    s = series_reciprocal(denom) * 2 * _dexp(_x_elem(x), mode, order)
    return as_lambda_poly(egf_extract(s, n))


# -- alternative routes ----------------------------------------------------


@lru_cache(maxsize=None)
def _t2_rec(n: int, k: int, mode: LambdaMode, k_scale: Fraction) -> Poly:
    if k > n or k < 0:
        return Poly((), X)
    if k == 0:
        return lambda_falling(SYMBOLIC_X, n, mode)
    m = n - 1
    x = Poly.gen(X)
    factor = x + (k * k_scale - m * mode.lam)
    prev = _t2_rec(m, k, mode, k_scale)
    below = _t2_rec(m, k - 1, mode, k_scale).shift(-HALF)
    return as_lambda_poly(prev * factor + below)


def t2_poly_recursive(
    n: int,
    k: int,
    mode: LambdaMode = SYMBOLIC,
    x: XSpec = SYMBOLIC_X,
    *,
    k_scale: Fraction = HALF,
) -> Poly:
    """T2(n,k|x) through T2(n+1,k|x) = (x + k/2 - n lam) T2(n,k|x) + T2(n,k-1|x-1/2).

    Seeded only by T2(n,0|x) = (x)_{n,lam}.  ``k_scale`` replaces the 1/2 in
    ``k/2``; anything other than 1/2 gives wrong values and is used to show
    that the checks can fail.
    """
    if n < 0 or k < 0:
        return Poly((), X)
    p = _t2_rec(n, k, mode, Fraction(k_scale))
    if x == SYMBOLIC_X:
        return p
    return as_lambda_poly(p.subs(X, Fraction(x)))


def t2_explicit(n: int, k: int, mode: LambdaMode = SYMBOLIC) -> Poly:
    """n!/k! * sum_l C(k,l) (-1)^(k-l) binom_lam(l - k/2, n)."""
    total: Any = Fraction(0)
    for l in range(k + 1):
        b = deformed_falling(Fraction(2 * l - k, 2), mode.lam, n) / math.factorial(n)
        total = total + b * (math.comb(k, l) * (-1) ** (k - l))
    return as_lambda_poly(total * Fraction(math.factorial(n), math.factorial(k)))


def t2_via_delta(n: int, k: int, mode: LambdaMode = SYMBOLIC, x: XSpec = SYMBOLIC_X) -> Poly:
    """sum_m (delta^k x^m / k!) lam^(n-m) s(n,m), with 0^0 = 1."""
    lam = mode.lam
    total: Any = Poly((), X)
    for m in range(n + 1):
        s = stirling1(n, m)
        if not s:
            continue
        d = delta_power_monomial(k, m)
        total = total + d * (lam ** (n - m) * s)
    total = total / math.factorial(k)
    if x != SYMBOLIC_X:
        total = total.subs(X, Fraction(x))
    return as_lambda_poly(total)


def euler_via_t2(n: int, r: Fraction | int = 1, x: XSpec = SYMBOLIC_X, mode: LambdaMode = SYMBOLIC) -> Poly:
    """sum_l C(r+l-1, l) (-1/2)^l l! T2(n,l | x + l/2)."""
    r = Fraction(r)
    total: Any = Poly((), X if x == SYMBOLIC_X else LAM)
    for l in range(n + 1):
        c = gen_binomial(r + l - 1, l) * Fraction(-1, 2) ** l * math.factorial(l)
        if not c:
            continue
        if x == SYMBOLIC_X:
            term = t2_poly(n, l, SYMBOLIC_X, mode).shift(Fraction(l, 2))
        else:
            term = t2_poly(n, l, Fraction(x) + Fraction(l, 2), mode)
        total = total + term * c
    return as_lambda_poly(total)


def t2_even_convolution(n: int, k: int, mode: LambdaMode = SYMBOLIC) -> Poly:
    """sum_{l<=k} sum_{i>=l} C(n,i) S2_lam(i,l) S2_{-lam}(n-i,k-l) (-1)^(n-i)."""

    def s2_neg(a: int, b: int) -> Poly:
        if mode.is_symbolic:
            return negate_lambda(stirling2_lambda(a, b, mode))
        return stirling2_lambda(a, b, mode.negated())

    total = Poly()
    for l in range(k + 1):
        for i in range(l, n + 1):
            if n - i < k - l:
                continue
            term = stirling2_lambda(i, l, mode) * s2_neg(n - i, k - l)
            total = total + term * (math.comb(n, i) * (-1) ** (n - i))
    return total
