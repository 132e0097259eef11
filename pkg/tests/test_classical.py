import math
from fractions import Fraction

import pytest

from degenfact.arith import X, Poly
from degenfact.classical import (
    central_diff,
    central_diff_reduction_check,
    central_diff_step,
    central_factorial_poly,
    central_first_kind,
    central_second_kind,
    central_second_kind_recurrence,
    central_second_kind_row_by_basis,
    falling_factorial_poly,
    stirling1,
    stirling2,
)
from degenfact.series import Series, log1p_series, series_rat_pow

F = Fraction
N = 12
x = Poly.gen(X)


def test_stirling1_examples():
    assert stirling1(0, 0) == 1
    assert [stirling1(3, k) for k in (1, 2, 3)] == [2, -3, 1]
    assert stirling1(4, 2) == 11
    assert stirling1(3, 5) == 0 and stirling1(3, 0) == 0


def test_stirling1_matches_falling_factorial_expansion():
    for n in range(N + 1):
        p = falling_factorial_poly(n)
        assert [stirling1(n, k) for k in range(n + 1)] == [p.coeff(k) for k in range(n + 1)]


def test_stirling1_egf():
    order = N + 1
    log1p = log1p_series(order)
    power = Series.one(order)
    for k in range(9):
        for n in range(order):
            assert stirling1(n, k) == power[n] * math.factorial(n) / math.factorial(k)
        power = power * log1p


def test_stirling2_values():
    assert stirling2(4, 2) == 7
    # x^n = sum S2(n,k) (x)_k
    for n in range(N + 1):
        s = sum((falling_factorial_poly(k) * stirling2(n, k) for k in range(n + 1)), Poly((), X))
        assert s == Poly.monomial(1, n, X)


def test_central_factorial_poly_examples():
    assert central_factorial_poly(0) == 1
    assert central_factorial_poly(3) == x ** 3 - x / 4
    assert central_factorial_poly(4) == x ** 4 - x ** 2


def test_central_factorial_egf():
    # sum x^[n] t^n/n! = (t/2 + sqrt(1 + t^2/4))^(2x) at rational x
    order = 10
    root = series_rat_pow(Series.from_coeffs([1, 0, F(1, 4)], order), F(1, 2))
    u = root + Series.from_coeffs([0, F(1, 2)], order)
    for xv in (F(1), F(1, 2), F(-3, 4), F(5, 3)):
        s = series_rat_pow(u, 2 * xv)
        for n in range(order):
            assert s[n] * math.factorial(n) == central_factorial_poly(n)(xv)


def test_central_first_kind_examples():
    assert central_first_kind(3, 1) == F(-1, 4)
    assert all(central_first_kind(n, n) == 1 for n in range(N + 1))
    assert central_first_kind(2, 1) == 0


def test_central_second_kind_examples():
    assert central_second_kind(2, 2) == 1
    assert central_second_kind(3, 1) == F(1, 4)
    assert central_second_kind(4, 2) == 1


def test_basis_inversion():
    for n in range(N + 1):
        s = sum((central_factorial_poly(k) * central_second_kind(n, k) for k in range(n + 1)), Poly((), X))
        assert s == Poly.monomial(1, n, X)


def test_basis_expansion_matches_egf():
    for n in range(N + 1):
        assert list(central_second_kind_row_by_basis(n)) == [central_second_kind(n, k) for k in range(n + 1)]


def test_first_and_second_kind_matrices_are_inverse():
    for n in range(N + 1):
        for k in range(N + 1):
            s = sum(central_first_kind(n, j) * central_second_kind(j, k) for j in range(N + 1))
            assert s == (1 if n == k else 0)
            s = sum(central_second_kind(n, j) * central_first_kind(j, k) for j in range(N + 1))
            assert s == (1 if n == k else 0)


def test_parity():
    for n in range(N + 1):
        for k in range(n + 1):
            if (n - k) % 2:
                assert central_second_kind(n, k) == 0
                assert central_first_kind(n, k) == 0


def test_recurrence_matches_egf():
    for n in range(2, N + 1):
        for k in range(2, n + 1):
            lhs = central_second_kind_recurrence(n, k)
            rhs = central_second_kind(n - 2, k - 2) + F(k * k, 4) * central_second_kind(n - 2, k)
            assert lhs == rhs == central_second_kind(n, k)


def test_central_diff_examples():
    assert central_diff(x, 1) == 1
    assert central_diff(x ** 2, 2) == 2
    assert central_diff(x ** 3, 1) == 3 * x ** 2 + F(1, 4)
    assert central_diff(x ** 3, 0) == x ** 3


def test_central_diff_is_iterated_step():
    for m in range(8):
        p = Poly.monomial(1, m, X)
        q = p
        for k in range(7):
            assert central_diff(p, k) == q
            q = central_diff_step(q)


def test_central_diff_linear():
    p = x ** 4 * 3 - x * F(2, 7) + 5
    assert central_diff(p, 2) == central_diff(x ** 4, 2) * 3 - central_diff(x, 2) * F(2, 7)


def test_central_diff_of_central_factorial():
    # delta x^[n] = n x^[n-1], the defining property of the central factorial basis
    for n in range(1, N + 1):
        assert central_diff(central_factorial_poly(n), 1) == central_factorial_poly(n - 1) * n


@pytest.mark.parametrize("k, m", [(1, 0), (1, 1)])
def test_reduction_examples(k, m):
    assert central_diff_reduction_check(k, m)


def test_reduction_sweep():
    assert all(central_diff_reduction_check(k, m) for k in range(1, 7) for m in range(9))
