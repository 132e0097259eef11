"""Exact scalars and dense univariate polynomials over a generic coefficient ring.

Scalars are :class:`fractions.Fraction`.  Polynomials carry a variable tag;
the tag fixes the nesting order so that a polynomial in ``x`` whose
coefficients are polynomials in ``lam`` interoperates with plain ``lam``
polynomials and with scalars.  Anything at a lower nesting level than a
polynomial is treated as one of its coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence


class DegenfactError(Exception):
    """Base class for library errors."""


class DomainError(DegenfactError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UsageError(DegenfactError, ValueError):
    """An operation was called with incompatible or malformed arguments."""


Rational = Fraction

LAM = "lam"
X = "x"

# outer variables have higher levels; scalars sit at level 0
_LEVELS = {LAM: 1, X: 2}
_DISPLAY = {LAM: "λ", X: "x"}


def rational(p: int, q: int = 1) -> Fraction:
    """Reduced fraction p/q with positive denominator."""
    if q == 0:
        raise DomainError("zero denominator")
    return Fraction(p, q)


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise UsageError(f"not a rational literal: {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return rational(p, q)


def format_rational(v: Fraction | int) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def _level(v: Any) -> int:
    if isinstance(v, Poly):
        return v.level
    return 0


def _is_zero(c: Any) -> bool:
    return c == 0


class Poly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``var**i``.

    Instances are immutable.  The zero polynomial has an empty coefficient
    tuple; otherwise the last coefficient is nonzero.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = LAM):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs, self.var))

    @classmethod
    def gen(cls, var: str = LAM) -> "Poly":
        return cls((0, 1), var)

    @classmethod
    def const(cls, c: Any, var: str = LAM) -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, c: Any, power: int, var: str = LAM) -> "Poly":
        return cls([0] * power + [c], var)

    @property
    def level(self) -> int:
        return _LEVELS.get(self.var, 1)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Any:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    # coercion: returns the other operand as a polynomial in self.var, or
    # None when it belongs to an outer ring
    def _lift(self, other: Any) -> "Poly | None":
        if isinstance(other, Poly):
            if other.level == self.level:
                if other.var != self.var:
                    raise UsageError(f"cannot mix variables {self.var!r} and {other.var!r}")
                return other
            if other.level > self.level:
                return None
            return Poly((other,), self.var)
        if isinstance(other, (int, Fraction)):
            return Poly((other,), self.var)
        return None

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly) and other.level > self.level:
            return other == self
        try:
            o = self._lift(other)
        except UsageError:
            return False
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash((self.var, self.coeffs))

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.var)

    def __pos__(self) -> "Poly":
        return self

    def __add__(self, other: Any) -> "Poly":
        o = self._lift(other)
        if o is None:
            # reflected methods are not tried between instances of one class
            return other + self if isinstance(other, Poly) else NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Poly":
        o = self._lift(other)
        if o is None:
            return (-other) + self if isinstance(other, Poly) else NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "Poly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "Poly":
        if _level(other) < self.level:
            if _is_zero(other):
                return Poly((), self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        o = self._lift(other)
        if o is None:
            return other * self if isinstance(other, Poly) else NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly((), self.var)
        out: list[Any] = [None] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                term = ai * bj
                k = i + j
                out[k] = term if out[k] is None else out[k] + term
        return Poly([Fraction(0) if c is None else c for c in out], self.var)

    def __rmul__(self, other: Any) -> "Poly":
        return self.__mul__(other)

    def __truediv__(self, other: Any) -> "Poly":
        """Division by a scalar (anything of lower level)."""
        if _level(other) >= self.level:
            return NotImplemented
        if isinstance(other, int):
            other = Fraction(other)
        return Poly([c / other for c in self.coeffs], self.var)

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise DomainError("polynomial powers need a nonnegative integer exponent")
        result = Poly((1,), self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, v: Any) -> Any:
        return poly_eval(self, v)

    def map_coeffs(self, fn: Callable[[Any], Any]) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], self.var)

    def subs(self, var: str, value: Any) -> Any:
        """Substitute ``value`` for ``var`` at whatever nesting level it sits."""
        if self.var == var:
            return poly_eval(self, value)
        return Poly([c.subs(var, value) if isinstance(c, Poly) else c for c in self.coeffs], self.var)

    def shift(self, a: Any) -> "Poly":
        """p(var + a)."""
        out = poly_eval(self, Poly((a, 1), self.var))
        return out if isinstance(out, Poly) and out.var == self.var else Poly((out,), self.var)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        name = _DISPLAY.get(self.var, self.var)
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            mono = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
            if isinstance(c, Poly):
                cs = str(c)
                if sum(1 for d in c.coeffs if not _is_zero(d)) > 1 or any(ch in cs[1:] for ch in "+-"):
                    cs = f"({cs})"
            else:
                cs = format_rational(c)
            if mono:
                if cs == "1":
                    cs = ""
                elif cs == "-1":
                    cs = "-"
                terms.append(f"{cs}{mono}" if not cs or cs == "-" or cs.startswith("(") else f"{cs}*{mono}")
            else:
                terms.append(cs)
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def poly_eval(p: Poly, v: Any) -> Any:
    """Horner evaluation of ``p`` at ``v``."""
    acc: Any = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def eval_at(value: Any, var: str, v: Any) -> Any:
    """Substitute ``var = v`` in a scalar or (possibly nested) polynomial."""
    if isinstance(value, Poly):
        return value.subs(var, v)
    return value


def as_lambda_poly(v: Any) -> Poly:
    """Normalize a scalar or lam-polynomial into a lam-polynomial.

    Polynomials in ``x`` keep their outer variable; their coefficients are
    normalized instead.
    """
    if isinstance(v, Poly):
        if v.var == LAM:
            return v
        return Poly([as_lambda_poly(c) for c in v.coeffs], v.var)
    return Poly((v,), LAM)


def to_jsonable(v: Any) -> Any:
    """Rationals become "p/q" strings, polynomials nested arrays of those."""
    if isinstance(v, Poly):
        return [to_jsonable(c) for c in v.coeffs]
    return format_rational(v)


def from_jsonable(obj: Any, variables: Sequence[str] = (LAM,)) -> Any:
    """Inverse of :func:`to_jsonable`.

    ``variables`` lists the polynomial variables from the outermost level
    inward; strings decode to rationals at any depth.
    """
    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, list):
        if not variables:
            raise UsageError("polynomial nesting deeper than declared variables")
        return Poly([from_jsonable(c, variables[1:]) for c in obj], variables[0])
    raise UsageError(f"cannot decode {obj!r}")
