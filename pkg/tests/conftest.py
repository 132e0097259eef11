from fractions import Fraction

import pytest

from degenfact.arith import LAM, X, Poly, as_lambda_poly


def bivariate(coeffs: dict[tuple[int, int], object]) -> Poly:
    """Build a polynomial in x over Q[lam] from {(x_power, lam_power): coeff}."""
    if not coeffs:
        return Poly((), X)
    dx = max(i for i, _ in coeffs)
    rows = []
    for i in range(dx + 1):
        dl = max([j for a, j in coeffs if a == i], default=0)
        rows.append(Poly([Fraction(coeffs.get((i, j), 0)) for j in range(dl + 1)], LAM))
    return Poly(rows, X)


def lam_poly(*cs) -> Poly:
    return Poly([Fraction(c) for c in cs], LAM)


@pytest.fixture(scope="session")
def sympy_egf():
    """Independent EGF coefficients via sympy series expansion (test oracle only)."""
    sp = pytest.importorskip("sympy")
    lam_s, t, x_s = sp.symbols("lambda t x")

    def to_poly(expr, with_x: bool):
        expr = sp.expand(expr)
        if expr == 0:
            return Poly((), X if with_x else LAM)
        gens = (x_s, lam_s) if with_x else (lam_s,)
        p = sp.Poly(expr, *gens)
        if with_x:
            return bivariate({m: Fraction(int(c.p), int(c.q)) for m, c in p.terms()})
        d = {m[0]: Fraction(int(c.p), int(c.q)) for m, c in p.terms()}
        return as_lambda_poly(Poly([d.get(j, 0) for j in range(max(d) + 1)], LAM))

    def coeffs(build, n_max: int, with_x: bool = False):
        expr = build(sp, lam_s, t, x_s)
        s = sp.series(expr, t, 0, n_max + 1).removeO()
        return [to_poly(sp.simplify(s.coeff(t, n) * sp.factorial(n)), with_x) for n in range(n_max + 1)]

    return coeffs


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
