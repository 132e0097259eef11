"""Materialized number triangles and their CSV / JSON forms."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import classical, degenerate
from .arith import LAM, X, Poly, UsageError, as_lambda_poly, format_rational, from_jsonable, parse_rational, to_jsonable
from .degenerate import SYMBOLIC, SYMBOLIC_X, LambdaMode, XSpec

FAMILIES = ("S1", "T_central", "t_central", "S2_lambda", "T2_lambda", "t1_lambda", "Euler_r")
CLASSICAL_FAMILIES = frozenset({"S1", "T_central", "t_central"})

_ALIASES = {
    "s1": "S1",
    "t_central": "t_central",
    "t": "t_central",
    "T": "T_central",
    "T_central": "T_central",
    "s2l": "S2_lambda",
    "s2_lambda": "S2_lambda",
    "t2": "T2_lambda",
    "t2_lambda": "T2_lambda",
    "t1": "t1_lambda",
    "t1_lambda": "t1_lambda",
    "euler": "Euler_r",
    "euler_r": "Euler_r",
}


def canonical_family(name: str) -> str:
    """Resolve a family name or alias.  ``T``/``t`` are case sensitive."""
    if name in FAMILIES:
        return name
    if name in _ALIASES:
        return _ALIASES[name]
    low = name.lower()
    if low in _ALIASES and low not in ("t",):
        return _ALIASES[low]
    raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def family_value(family: str, n: int, k: int, mode: LambdaMode = SYMBOLIC,
                 r: Fraction = Fraction(1), x: XSpec | None = None) -> Poly:
    """One entry of a family, normalized to a lam-polynomial (or x-polynomial)."""
    family = canonical_family(family)
    if family == "S1":
        return as_lambda_poly(classical.stirling1(n, k))
    if family == "T_central":
        return as_lambda_poly(classical.central_second_kind(n, k))
    if family == "t_central":
        return as_lambda_poly(classical.central_first_kind(n, k))
    if family == "S2_lambda":
        return degenerate.stirling2_lambda(n, k, mode)
    if family == "T2_lambda":
        if x is None:
            return degenerate.t2_number(n, k, mode)
        return degenerate.t2_poly(n, k, x, mode)
    if family == "t1_lambda":
        return degenerate.t1_degenerate(n, k, mode)
    if family == "Euler_r":
        return degenerate.degenerate_euler(n, r, Fraction(0) if x is None else x, mode)
    raise UsageError(family)


@dataclass
class NumberTriangle:
    family: str
    n_max: int
    k_max: int
    mode: LambdaMode = SYMBOLIC
    r: Fraction | None = None
    x: XSpec | None = None
    entries: dict[tuple[int, int], Any] = field(default_factory=dict)

    def __getitem__(self, nk: tuple[int, int]) -> Any:
        n, k = nk
        if k > n:
            return Poly()
        return self.entries[(n, k)]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def symbolic_values(self) -> bool:
        """True when values are written as coefficient arrays."""
        if self.family in CLASSICAL_FAMILIES:
            return False
        return self.mode.is_symbolic or self.x == SYMBOLIC_X

    def index(self) -> list[tuple[int, int]]:
        if self.family == "Euler_r":
            return [(n, 0) for n in range(self.n_max + 1)]
        return [(n, k) for n in range(self.n_max + 1) for k in range(min(n, self.k_max) + 1)]


def _row(args) -> list[tuple[tuple[int, int], Any]]:
    family, n, k_max, mode, r, x = args
    if family == "Euler_r":
        return [((n, 0), family_value(family, n, 0, mode, r, x))]
    return [((n, k), family_value(family, n, k, mode, r, x)) for k in range(min(n, k_max) + 1)]


def build_triangle(family: str, n_max: int, k_max: int | None = None, mode: LambdaMode = SYMBOLIC,
                   r: Fraction | int | None = None, x: XSpec | None = None, jobs: int = 1) -> NumberTriangle:
    family = canonical_family(family)
    if n_max < 0:
        raise UsageError("n_max must be nonnegative")
    if k_max is None:
        k_max = n_max
    if family == "Euler_r":
        r = Fraction(1) if r is None else Fraction(r)
        k_max = 0
    else:
        r = None
    tri = NumberTriangle(family, n_max, k_max, mode, r, x)
    work = [(family, n, k_max, mode, r, x) for n in range(n_max + 1)]
    if jobs > 1 and n_max > 0:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row, work))
    else:
        rows = [_row(w) for w in work]
    for row in rows:
        tri.entries.update(row)
    return tri


# -- wire format -----------------------------------------------------------


def _collapse(v: Any) -> Any:
    # constant lam-polynomials become plain rationals
    if isinstance(v, Poly):
        if v.var == LAM and v.degree <= 0:
            return Fraction(v.coeff(0))
        return v.map_coeffs(_collapse)
    return v


def encode_value(v: Any, symbolic: bool) -> Any:
    """JSON-ready form: arrays in symbolic mode, "p/q" strings otherwise."""
    if not symbolic:
        v = _collapse(v)
        if isinstance(v, Poly):
            return to_jsonable(v)
        return format_rational(v)
    return to_jsonable(v)


def decode_value(obj: Any, symbolic: bool, x_outer: bool = False) -> Any:
    if symbolic:
        return as_lambda_poly(from_jsonable(obj, (X, LAM) if x_outer else (LAM,)))
    if isinstance(obj, list):
        return as_lambda_poly(from_jsonable(obj, (X,)))
    return as_lambda_poly(parse_rational(obj))


def _cell(v: Any, symbolic: bool) -> str:
    enc = encode_value(v, symbolic)
    return enc if isinstance(enc, str) else json.dumps(enc, separators=(",", ":"))


def to_csv(tri: NumberTriangle) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "value"])
    sym = tri.symbolic_values
    for n, k in tri.index():
        w.writerow([n, k, _cell(tri.entries[(n, k)], sym)])
    return buf.getvalue()


def _meta(tri: NumberTriangle) -> dict[str, Any]:
    meta: dict[str, Any] = {
        "family": tri.family,
        "n_max": tri.n_max,
        "k_max": tri.k_max,
        "lambda": str(tri.mode),
    }
    if tri.r is not None:
        meta["r"] = format_rational(tri.r)
    if tri.x is not None:
        meta["x"] = tri.x if isinstance(tri.x, str) else format_rational(tri.x)
    return meta


def to_json(tri: NumberTriangle) -> str:
    sym = tri.symbolic_values
    doc = _meta(tri)
    doc["entries"] = [
        {"n": n, "k": k, "value": encode_value(tri.entries[(n, k)], sym)} for n, k in tri.index()
    ]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _parse_x(obj: Any) -> XSpec | None:
    if obj is None:
        return None
    return SYMBOLIC_X if obj == SYMBOLIC_X else parse_rational(obj)


def from_json(text: str) -> NumberTriangle:
    doc = json.loads(text)
    family = canonical_family(doc["family"])
    mode = LambdaMode.parse(doc["lambda"])
    r = parse_rational(doc["r"]) if "r" in doc else None
    tri = NumberTriangle(family, doc["n_max"], doc["k_max"], mode, r, _parse_x(doc.get("x")))
    sym = tri.symbolic_values
    x_outer = tri.x == SYMBOLIC_X
    for e in doc["entries"]:
        tri.entries[(e["n"], e["k"])] = decode_value(e["value"], sym, x_outer)
    return tri


def from_csv(text: str, family: str, n_max: int, k_max: int, mode: LambdaMode = SYMBOLIC,
             r: Fraction | None = None, x: XSpec | None = None) -> NumberTriangle:
    """Read a CSV table; the metadata is not part of the CSV and must be supplied."""
    family = canonical_family(family)
    tri = NumberTriangle(family, n_max, k_max, mode, r, x)
    sym = tri.symbolic_values
    x_outer = x == SYMBOLIC_X
    rows = csv.reader(io.StringIO(text))
    header = next(rows)
    if header != ["n", "k", "value"]:
        raise UsageError(f"unexpected CSV header {header!r}")
    for n, k, value in rows:
        obj = json.loads(value) if value.startswith("[") else value
        tri.entries[(int(n), int(k))] = decode_value(obj, sym, x_outer)
    return tri
