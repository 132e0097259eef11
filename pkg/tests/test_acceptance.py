"""Exit criteria.  Each test prints one PASS/FAIL line (collected in the terminal summary).

Run alone with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from degenfact import classical, degenerate
from degenfact.arith import LAM, Poly
from degenfact.degenerate import SYMBOLIC, LambdaMode
from degenfact.series import Series, series_compose
from degenfact.verify import CHECK_IDS, IdentityCheck, run_check

RESULTS: list[str] = []
F = Fraction


def _fresh():
    # cold caches, so that the runtime limits measure the real work
    for mod in (classical, degenerate):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


@contextmanager
def criterion(label: str, limit: float | None = None):
    _fresh()
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        timed_ok = limit is None or elapsed < limit
        status = "PASS" if ok and timed_ok else "FAIL"
        bound = f" (limit {limit:g}s)" if limit is not None else ""
        line = f"{status}  {label}  [{elapsed:.2f}s{bound}]"
        RESULTS.append(line)
        print(line)
    assert timed_ok, f"{label}: {elapsed:.2f}s exceeds {limit}s"


def _passes(cid, n_max, k_max, mode=SYMBOLIC, x="symbolic"):
    c = run_check(IdentityCheck(cid, n_max, k_max, mode, x))
    assert c.status == "pass", c.counterexample
    assert c.compared > 0
    return c


def test_c01_thm1_convolution():
    with criterion("C1  convolution T2(n,k|x) = sum C(n,l) T2(l,k) (x)_{n-l}, 0<=k<=n<=12", 5):
        c = _passes("THM1", 12, 12)
        assert c.compared == 91


def test_c02_thm2_thm3_delta_route():
    with criterion("C2  delta/Stirling-1 sum = T2(n,k|x), zero for n<k, n,k<=12", 10):
        _passes("THM2", 12, 12)
        _passes("THM3", 12, 12)


def test_c03_thm4_thm5_recursion():
    with criterion("C3  recursion in n reproduces EGF values 1<=k<=n<=12; lam=0,x=0 classical form", 5):
        _passes("THM4", 12, 12)
        _passes("THM5", 12, 12)
        _passes("LIMIT_THM5", 12, 12)
        _passes("LIMIT_THM5", 12, 12, LambdaMode.concrete(0))


def test_c04_thm6_explicit():
    with criterion("C4  explicit lam-binomial sum = T2(n,k), zero for n<k, n,k<=12", 5):
        _passes("THM6", 12, 12)


def test_c05_thm7_euler():
    with criterion("C5  Euler order r in {1,2,1/2} via T2, n<=8, symbolic lam and x; r=1 vs Carlitz", 5):
        c = _passes("THM7", 8, 8)
        assert c.compared == 9 * 3 + 9


def test_c06_thm8_even():
    with criterion("C6  double sum = k! C(2k,k) T2(n,2k), n<=10, k<=4, zero for n<2k", 5):
        _passes("THM8", 10, 4)


def test_c07_classical_limits():
    with criterion("C7  lam=0 values of S2_lam, T2_lam, t1_lam equal S2, T, t (basis expansions), n,k<=12"):
        for mode in (SYMBOLIC, LambdaMode.concrete(0)):
            _passes("LIMIT_S2", 12, 12, mode)
            _passes("LIMIT_T2", 12, 12, mode)


def test_c08_inverse_pair():
    with criterion("C8  revert(g) o g = t at order 16 over Q[lam]; [t1_lam][T2_lam] = I, n,k<=10"):
        g = degenerate.central_map(SYMBOLIC, 16)
        h = degenerate.inverse_central_map(SYMBOLIC, 16)
        assert series_compose(h, g) == Series.identity(16)
        assert series_compose(g, h) == Series.identity(16)
        assert any(isinstance(c, Poly) and c.var == LAM and c.degree > 0 for c in h.coeffs)
        _passes("INVERSE_PAIR", 10, 10)


def test_c09_delta_reduction():
    with criterion("C9  delta^k x^{m+1} = (x+k/2) delta^k x^m + k delta^{k-1}(x-1/2)^m, k<=6, m<=8"):
        c = _passes("EQ15", 8, 6)
        assert c.compared == 6 * 9
        assert all(classical.central_diff_reduction_check(k, m) for k in range(1, 7) for m in range(9))


def test_c10_negative_controls():
    with criterion("C10 every check fails under a seeded mutation; k/2 -> k caught"):
        for cid in CHECK_IDS:
            for seed in (11, 12, 13):
                c = run_check(IdentityCheck(cid, 6, 6, mutate_seed=seed))
                assert c.status == "fail", (cid, seed)
        for cid in ("THM4", "THM5", "LIMIT_THM5", "EQ15"):
            assert run_check(IdentityCheck(cid, 6, 6, k_scale=F(1))).status == "fail", cid


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
