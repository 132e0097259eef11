"""Exact verification of every identity, each through two independent routes.

A check walks its index range and compares a left-hand side against a
right-hand side with exact equality.  It passes only if every comparison
does; otherwise it reports the first counterexample in iteration order,
which runs through indices in increasing order.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Iterator

from . import classical as cl
from . import degenerate as dg
from .arith import LAM, X, Poly, UsageError, as_lambda_poly, format_rational
from .degenerate import SYMBOLIC, SYMBOLIC_X, LambdaMode, XSpec
from .series import Series, series_compose

CHECK_IDS = (
    "THM1", "THM2", "THM3", "THM4", "THM5", "THM6", "THM7", "THM8",
    "EQ2", "EQ12", "EQ15",
    "LIMIT_S2", "LIMIT_T2", "LIMIT_THM5",
    "INVERSE_PAIR",
)

CONCRETE_SAMPLES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 3), Fraction(-2, 5))
DEFAULT_MODES = (SYMBOLIC, LambdaMode.concrete(Fraction(1, 3)), LambdaMode.concrete(0))
EULER_ORDERS = (Fraction(1), Fraction(2), Fraction(1, 2))

Comparison = tuple[tuple, Any, Any]


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    n_max: int = 12
    k_max: int = 12
    mode: LambdaMode = SYMBOLIC
    x: XSpec = SYMBOLIC_X
    # negative controls: perturb one seeded left-hand side, or replace the
    # 1/2 in the k/2 recurrence coefficient
    mutate_seed: int | None = None
    k_scale: Fraction = Fraction(1, 2)
    status: str = "pending"
    compared: int = 0
    counterexample: dict | None = None
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "skip")

    def to_dict(self, timing: bool = False) -> dict:
        d: dict[str, Any] = {
            "check_id": self.id,
            "lambda": str(self.mode),
            "x": self.x if isinstance(self.x, str) else format_rational(self.x),
            "range": {"n_max": self.n_max, "k_max": self.k_max},
            "status": self.status,
            "compared": self.compared,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if timing and self.seconds is not None:
            d["seconds"] = round(self.seconds, 4)
        return d


# -- helpers ---------------------------------------------------------------


def _x_plus(x: XSpec, a: Fraction) -> XSpec:
    return x if x == SYMBOLIC_X else Fraction(x) + a


def _shift(p: Poly, x: XSpec, a: Fraction, value_at: Callable[[XSpec], Poly]) -> Poly:
    """p(x + a), for symbolic x by substitution, else by recomputing at x + a."""
    if x == SYMBOLIC_X:
        return as_lambda_poly(p.shift(a))
    return value_at(Fraction(x) + a)


def _at_lambda_zero(v: Any, mode: LambdaMode) -> Any:
    if mode.is_symbolic:
        return as_lambda_poly(v.subs(LAM, Fraction(0)) if isinstance(v, Poly) else v)
    return v


def _limit_applicable(mode: LambdaMode) -> bool:
    return mode.is_symbolic or mode.value == 0


def _zero_like(x: XSpec) -> Poly:
    return Poly((), X if x == SYMBOLIC_X else LAM)


def _tri(n_max: int, k_max: int) -> Iterator[tuple[int, int]]:
    for n in range(n_max + 1):
        for k in range(min(n, k_max) + 1):
            yield n, k


def _square(n_max: int, k_max: int) -> Iterator[tuple[int, int]]:
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            yield n, k


# -- checks ----------------------------------------------------------------


def _thm1(c: IdentityCheck) -> Iterator[Comparison]:
    lam_x = c.x if c.x == SYMBOLIC_X else Fraction(c.x)
    for n, k in _tri(c.n_max, c.k_max):
        lhs = dg.t2_poly(n, k, c.x, c.mode)
        rhs: Any = _zero_like(c.x)
        for l in range(k, n + 1):
            rhs = rhs + dg.lambda_falling(lam_x, n - l, c.mode) * (dg.t2_number(l, k, c.mode) * math.comb(n, l))
        yield (n, k), lhs, as_lambda_poly(rhs)


def _thm2(c: IdentityCheck) -> Iterator[Comparison]:
    for n, k in _square(c.n_max, c.k_max):
        lhs = dg.t2_via_delta(n, k, c.mode, c.x)
        rhs = dg.t2_poly(n, k, c.x, c.mode) if n >= k else _zero_like(c.x)
        yield (n, k), lhs, rhs


def _thm3(c: IdentityCheck) -> Iterator[Comparison]:
    for n, k in _square(c.n_max, c.k_max):
        lhs = dg.t2_via_delta(n, k, c.mode, Fraction(0))
        rhs = dg.t2_number(n, k, c.mode) if n >= k else Poly()
        yield (n, k), lhs, rhs


def _thm4(c: IdentityCheck) -> Iterator[Comparison]:
    x = Poly.gen(X) if c.x == SYMBOLIC_X else Fraction(c.x)
    lam = c.mode.lam

    def t2_at(n: int, k: int) -> Callable[[XSpec], Poly]:
        return lambda xv: dg.t2_poly(n, k, xv, c.mode)

    # the theorem itself, with every value read off the generating function
    for n in range(1, c.n_max):
        for k in range(1, min(n, c.k_max) + 1):
            lhs = dg.t2_poly(n + 1, k, c.x, c.mode)
            prev = dg.t2_poly(n, k, c.x, c.mode)
            below = _shift(dg.t2_poly(n, k - 1, c.x, c.mode), c.x, Fraction(-1, 2), t2_at(n, k - 1))
            rhs = as_lambda_poly(prev * (x + (k * c.k_scale - n * lam)) + below)
            yield ("identity", n + 1, k), lhs, rhs
    # the recursion alone reproduces the generating-function values
    for n, k in _tri(c.n_max, c.k_max):
        if k == 0:
            continue
        lhs = dg.t2_poly_recursive(n, k, c.mode, c.x, k_scale=c.k_scale)
        yield ("recursion", n, k), lhs, dg.t2_poly(n, k, c.x, c.mode)


def _thm5(c: IdentityCheck) -> Iterator[Comparison]:
    lam = c.mode.lam
    for n in range(1, c.n_max):
        for k in range(1, min(n, c.k_max) + 1):
            lhs = dg.t2_number(n + 1, k, c.mode)
            rhs = dg.t2_number(n, k, c.mode) * (k * c.k_scale - n * lam) + dg.t2_poly(n, k - 1, Fraction(-1, 2), c.mode)
            yield (n + 1, k), lhs, as_lambda_poly(rhs)


def _thm6(c: IdentityCheck) -> Iterator[Comparison]:
    for n, k in _square(c.n_max, c.k_max):
        yield (n, k), dg.t2_explicit(n, k, c.mode), dg.t2_number(n, k, c.mode)


def _thm7(c: IdentityCheck) -> Iterator[Comparison]:
    for n in range(c.n_max + 1):
        for r in EULER_ORDERS:
            lhs = dg.degenerate_euler(n, r, c.x, c.mode)
            yield (n, format_rational(r)), lhs, dg.euler_via_t2(n, r, c.x, c.mode)
    for n in range(c.n_max + 1):
        lhs = dg.degenerate_euler(n, 1, c.x, c.mode)
        yield ("carlitz", n), lhs, dg.euler_carlitz(n, c.x, c.mode)


def _thm8(c: IdentityCheck) -> Iterator[Comparison]:
    for n, k in _square(c.n_max, c.k_max):
        lhs = dg.t2_even_convolution(n, k, c.mode)
        rhs = dg.t2_number(n, 2 * k, c.mode) * (math.factorial(k) * math.comb(2 * k, k))
        yield (n, k), lhs, rhs


def _eq2(c: IdentityCheck) -> Iterator[Comparison]:
    def s1(n: int, k: int) -> Fraction:
        # coefficients of the expanded falling factorial, not the recurrence
        return Fraction(cl.falling_factorial_poly(n).coeff(k))

    for n in range(c.n_max):
        for k in range(1, min(n, c.k_max) + 1):
            yield ("recurrence", n + 1, k), s1(n + 1, k), s1(n, k - 1) - n * s1(n, k)
    for n, k in _tri(c.n_max, c.k_max):
        yield ("table", n, k), cl.stirling1(n, k), s1(n, k)


def _eq12(c: IdentityCheck) -> Iterator[Comparison]:
    for n in range(c.n_max + 1):
        rhs = Poly((), X)
        for k in range(n + 1):
            rhs = rhs + cl.central_factorial_poly(k) * cl.central_second_kind(n, k)
        yield ("basis", n), Poly.monomial(1, n, X), rhs
    for n, k in _tri(c.n_max, c.k_max):
        yield ("recurrence", n, k), cl.central_second_kind_recurrence(n, k), cl.central_second_kind(n, k)


def _eq15(c: IdentityCheck) -> Iterator[Comparison]:
    x = Poly.gen(X)
    for k in range(1, c.k_max + 1):
        for m in range(c.n_max + 1):
            lhs = cl.delta_power_monomial(k, m + 1)
            below = cl.central_diff(Poly.monomial(1, m, X).shift(Fraction(-1, 2)), k - 1)
            rhs = (x + k * c.k_scale) * cl.delta_power_monomial(k, m) + below * k
            yield (k, m), lhs, rhs


def _limit_s2(c: IdentityCheck) -> Iterator[Comparison]:
    for n, k in _tri(c.n_max, c.k_max):
        lhs = _at_lambda_zero(dg.stirling2_lambda(n, k, c.mode), c.mode)
        yield (n, k), lhs, as_lambda_poly(cl.stirling2(n, k))


def _limit_t2(c: IdentityCheck) -> Iterator[Comparison]:
    for n, k in _tri(c.n_max, c.k_max):
        lhs = _at_lambda_zero(dg.t2_number(n, k, c.mode), c.mode)
        yield ("T2", n, k), lhs, as_lambda_poly(cl.central_second_kind_row_by_basis(n)[k])
    for n, k in _tri(c.n_max, c.k_max):
        lhs = _at_lambda_zero(dg.t1_degenerate(n, k, c.mode), c.mode)
        yield ("t1", n, k), lhs, as_lambda_poly(cl.central_first_kind(n, k))


def _limit_thm5(c: IdentityCheck) -> Iterator[Comparison]:
    zero = LambdaMode.concrete(0)
    for n in range(1, c.n_max):
        for k in range(1, min(n, c.k_max) + 1):
            lhs = cl.central_second_kind(n + 1, k)
            rhs = cl.central_second_kind(n, k) * (k * c.k_scale) + dg.t2_poly(n, k - 1, Fraction(-1, 2), zero).coeff(0)
            yield ("classical", n + 1, k), as_lambda_poly(lhs), as_lambda_poly(rhs)
    for n, k in _tri(c.n_max, c.k_max):
        if k == 0:
            continue
        rec = dg.t2_poly_recursive(n, k, c.mode, Fraction(0), k_scale=c.k_scale)
        yield ("recursion", n, k), _at_lambda_zero(rec, c.mode), as_lambda_poly(cl.central_second_kind(n, k))


def _inverse_pair(c: IdentityCheck) -> Iterator[Comparison]:
    order = c.n_max + 1
    g = dg.central_map(c.mode, order)
    h = dg.inverse_central_map(c.mode, order)
    ident = Series.identity(order)
    for label, s in (("h(g)", series_compose(h, g)), ("g(h)", series_compose(g, h))):
        for i in range(order):
            yield (label, i), as_lambda_poly(s[i]), as_lambda_poly(ident[i])
    size = min(c.n_max, c.k_max)
    for n in range(size + 1):
        for k in range(size + 1):
            lhs = Poly()
            for j in range(k, n + 1):
                lhs = lhs + dg.t1_degenerate(n, j, c.mode) * dg.t2_number(j, k, c.mode)
            yield ("t1*T2", n, k), lhs, Poly((1 if n == k else 0,))


_CHECKS: dict[str, Callable[[IdentityCheck], Iterator[Comparison]]] = {
    "THM1": _thm1, "THM2": _thm2, "THM3": _thm3, "THM4": _thm4, "THM5": _thm5,
    "THM6": _thm6, "THM7": _thm7, "THM8": _thm8,
    "EQ2": _eq2, "EQ12": _eq12, "EQ15": _eq15,
    "LIMIT_S2": _limit_s2, "LIMIT_T2": _limit_t2, "LIMIT_THM5": _limit_thm5,
    "INVERSE_PAIR": _inverse_pair,
}
_LIMIT_CHECKS = frozenset({"LIMIT_S2", "LIMIT_T2", "LIMIT_THM5"})


def _index_json(idx: tuple) -> list:
    return [v if isinstance(v, (int, str)) else str(v) for v in idx]


def _mutate(comparisons: list[Comparison], seed: int) -> list[Comparison]:
    rng = random.Random(seed)
    pos = rng.randrange(len(comparisons))
    delta = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    idx, lhs, rhs = comparisons[pos]
    out = list(comparisons)
    out[pos] = (idx, lhs + delta, rhs)
    return out


def run_check(check: IdentityCheck) -> IdentityCheck:
    """Run one check and return a copy with status filled in."""
    if check.id not in _CHECKS:
        raise UsageError(f"unknown check {check.id!r}; choose from {', '.join(CHECK_IDS)}")
    if check.n_max < 0 or check.k_max < 0:
        raise UsageError("range bounds must be nonnegative")
    start = time.perf_counter()
    if check.id in _LIMIT_CHECKS and not _limit_applicable(check.mode):
        return replace(check, status="skip", compared=0, seconds=time.perf_counter() - start)
    comparisons: Any = _CHECKS[check.id](check)
    if check.mutate_seed is not None:
        comparisons = list(comparisons)
        if comparisons:
            comparisons = _mutate(comparisons, check.mutate_seed)
    compared = 0
    for idx, lhs, rhs in comparisons:
        compared += 1
        if lhs != rhs:
            cx = {"index": _index_json(idx), "lhs": str(lhs), "rhs": str(rhs)}
            return replace(check, status="fail", compared=compared, counterexample=cx,
                           seconds=time.perf_counter() - start)
    return replace(check, status="pass", compared=compared, seconds=time.perf_counter() - start)


@dataclass
class Report:
    checks: list[IdentityCheck] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self, timing: bool = False) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():4}  {c.id:<12}  lambda={str(c.mode):<8}  n<={c.n_max} k<={c.k_max}  compared={c.compared}"
            if timing and c.seconds is not None:
                line += f"  {c.seconds:.3f}s"
            lines.append(line)
            if c.counterexample:
                cx = c.counterexample
                lines.append(f"      first counterexample at {cx['index']}: lhs = {cx['lhs']}  rhs = {cx['rhs']}")
        failed = sum(1 for c in self.checks if c.status == "fail")
        skipped = sum(1 for c in self.checks if c.status == "skip")
        summary = f"{len(self.checks)} checks: {len(self.checks) - failed - skipped} passed, {failed} failed, {skipped} skipped"
        if timing:
            summary += f" in {self.seconds:.2f}s"
        lines.append(summary)
        return "\n".join(lines) + "\n"

    def to_json(self, timing: bool = False) -> str:
        doc: dict[str, Any] = {
            "passed": self.passed,
            "checks": [c.to_dict(timing) for c in self.checks],
        }
        if timing:
            doc["seconds"] = round(self.seconds, 4)
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def run_all(n_max: int = 12, k_max: int | None = None, modes=DEFAULT_MODES,
            x: XSpec = SYMBOLIC_X, ids=CHECK_IDS) -> Report:
    """Every requested check for every lam-mode, in a fixed order."""
    if k_max is None:
        k_max = n_max
    start = time.perf_counter()
    report = Report()
    for mode in modes:
        for cid in ids:
            report.checks.append(run_check(IdentityCheck(cid, n_max, k_max, mode, x)))
    report.seconds = time.perf_counter() - start
    return report
