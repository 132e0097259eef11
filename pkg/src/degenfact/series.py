"""Truncated formal power series over a generic coefficient ring.

A :class:`Series` of order ``N`` keeps the coefficients of ``t**0 .. t**(N-1)``
as plain power-series coefficients.  Exponential generating functions are
read off with :func:`egf_extract`, which is the only place the ``n!`` factor
appears.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .arith import DomainError, UsageError, _is_zero


def _norm(c: Any) -> Any:
    return Fraction(c) if isinstance(c, int) else c


def gen_binomial(e: Fraction, j: int) -> Fraction:
    """e(e-1)...(e-j+1)/j! for rational e."""
    out = Fraction(1)
    for i in range(j):
        out = out * (e - i) / (i + 1)
    return out


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any]):
        object.__setattr__(self, "coeffs", tuple(_norm(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    def __reduce__(self):
        return (Series, (self.coeffs,))

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0] * order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1] + [0] * (order - 1)) if order else cls(())

    @classmethod
    def identity(cls, order: int) -> "Series":
        """The series t."""
        return cls(([0, 1] + [0] * (order - 2))[:order])

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Any], order: int) -> "Series":
        cs = list(coeffs)[:order]
        return cls(cs + [0] * (order - len(cs)))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Any:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r})"

    def _check(self, other: "Series") -> None:
        if self.order != other.order:
            raise UsageError(f"series order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            self._check(other)
            return Series(a + b for a, b in zip(self.coeffs, other.coeffs))
        if not self.coeffs:
            return self
        return Series((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> "Series":
        return self + (-other)

    def __rsub__(self, other: Any) -> "Series":
        return (-self) + other

    def __mul__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        return Series(c * other for c in self.coeffs)

    def __rmul__(self, other: Any) -> "Series":
        return Series(other * c for c in self.coeffs)

    def __truediv__(self, scalar: Any) -> "Series":
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        return Series(c / scalar for c in self.coeffs)

    def __pow__(self, k: int) -> "Series":
        return series_int_pow(self, k)

    def map_coeffs(self, fn) -> "Series":
        return Series(fn(c) for c in self.coeffs)

    def truncate(self, order: int) -> "Series":
        return Series.from_coeffs(self.coeffs, order)


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the common order."""
    a._check(b)
    n = a.order
    out: list[Any] = [None] * n
    for i, ai in enumerate(a.coeffs):
        if _is_zero(ai):
            continue
        for j in range(n - i):
            bj = b.coeffs[j]
            if _is_zero(bj):
                continue
            term = ai * bj
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    return Series(Fraction(0) if c is None else c for c in out)


def series_int_pow(a: Series, k: int) -> Series:
    if k < 0:
        raise DomainError("integer power must be nonnegative")
    result = Series.one(a.order)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def series_rat_pow(a: Series, e: Fraction | int) -> Series:
    """a**e for a series with constant term 1, via the generalized binomial series."""
    if a.order == 0:
        return a
    if a.coeffs[0] != 1:
        raise DomainError("rational power needs constant term 1")
    e = Fraction(e)
    u = a - 1
    out = Series.one(a.order)
    term = Series.one(a.order)
    # u has zero constant term so u**j vanishes for j >= order
    for j in range(1, a.order):
        term = term * u
        c = gen_binomial(e, j)
        if c:
            out = out + term * c
    return out


def series_reciprocal(a: Series) -> Series:
    """1/a by solving a*b = 1 term by term; the constant term must be invertible."""
    if a.order == 0:
        return a
    a0 = a.coeffs[0]
    if _is_zero(a0):
        raise DomainError("series with zero constant term has no reciprocal")
    if isinstance(a0, (int, Fraction)):
        inv0 = 1 / Fraction(a0)
    elif getattr(a0, "degree", None) == 0:
        inv0 = 1 / Fraction(a0.coeff(0))
    else:
        raise DomainError("constant term is not invertible in the coefficient ring")
    b: list[Any] = [inv0]
    for n in range(1, a.order):
        s = sum((a.coeffs[i] * b[n - i] for i in range(1, n + 1)), Fraction(0))
        b.append(-s * inv0)
    return Series(b)


def series_compose(f: Series, g: Series) -> Series:
    """f(g(t)); ``g`` must have zero constant term."""
    f._check(g)
    if g.order and not _is_zero(g.coeffs[0]):
        raise DomainError("inner series must have zero constant term")
    acc = Series.zero(f.order)
    for c in reversed(f.coeffs):
        acc = acc * g + c
    return acc


def series_revert(g: Series) -> Series:
    """Compositional inverse h with g(h(t)) = h(g(t)) = t.

    Coefficients are solved one at a time.  ``pw[j][m]`` holds the
    coefficient of t**m in h**j; for j >= 2 it only involves coefficients
    of h below m, which lets each new coefficient be read off directly.
    """
    n = g.order
    if n == 0:
        return g
    if not _is_zero(g.coeffs[0]):
        raise DomainError("reversion needs zero constant term")
    if n == 1:
        return Series.zero(1)
    g1 = g.coeffs[1]
    if _is_zero(g1):
        raise DomainError("reversion needs an invertible linear coefficient")
    if g1 == 1:
        inv1 = Fraction(1)
    elif isinstance(g1, Fraction):
        inv1 = 1 / g1
    else:
        raise DomainError("reversion over a polynomial ring needs linear coefficient 1")

    zero = Fraction(0)
    h: list[Any] = [zero, inv1]
    # pw[j][m] for 1 <= j <= m
    pw: list[list[Any]] = [[], [zero, inv1]]
    for m in range(2, n):
        for j in range(2, m + 1):
            if len(pw) <= j:
                pw.append([zero] * j)
            # h**j at t**m = sum_i h_i * (h**(j-1) at t**(m-i))
            s: Any = zero
            for i in range(1, m - j + 2):
                prev = pw[j - 1][m - i]
                if _is_zero(h[i]) or _is_zero(prev):
                    continue
                s = s + h[i] * prev
            pw[j].append(s)
        acc: Any = zero
        for j in range(2, m + 1):
            gj = g.coeffs[j]
            if _is_zero(gj):
                continue
            acc = acc + gj * pw[j][m]
        hm = -acc * inv1
        h.append(hm)
        pw[1].append(hm)
    return Series(h)


def deformed_falling(a: Any, lam: Any, n: int) -> Any:
    """a(a - lam)(a - 2 lam)...(a - (n-1) lam); empty product is 1."""
    out: Any = Fraction(1)
    for j in range(n):
        out = out * (a - j * lam)
    return out


def deformed_exp(a: Any, lam: Any, order: int) -> Series:
    """(1 + lam t)**(a/lam) = sum_l (a)_{l,lam} t**l / l!.

    ``lam`` is either a rational or the lam-generator polynomial; ``a`` may be
    a rational or any ring element (e.g. the x-generator).  lam = 0 gives
    exp(a t).
    """
    coeffs: list[Any] = []
    c: Any = Fraction(1)
    for l in range(order):
        coeffs.append(c)
        c = c * (a - l * lam) / (l + 1)
    return Series(coeffs)


def exp_series(a: Fraction, order: int) -> Series:
    """exp(a t) with rational a."""
    return Series(Fraction(a) ** l / math.factorial(l) for l in range(order))


def log1p_series(order: int) -> Series:
    """log(1 + t)."""
    return Series.from_coeffs([0] + [Fraction((-1) ** (j + 1), j) for j in range(1, order)], order)


def order_for(n: int) -> int:
    """Truncation order large enough to read coefficient n.

    Rounded up to a multiple of 8 so that nearby queries share cached series;
    coefficients below the order do not depend on it.
    """
    return (n // 8 + 1) * 8


def egf_extract(s: Series, n: int) -> Any:
    """n! times the coefficient of t**n."""
    if n >= s.order:
        raise UsageError(f"index {n} beyond series order {s.order}")
    c = s.coeffs[n]
    f = math.factorial(n)
    return c * f if not isinstance(c, int) else Fraction(c * f)
