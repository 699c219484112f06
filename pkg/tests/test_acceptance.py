"""Acceptance suite: one test per criterion, each with its own time budget.

Every test records a PASS/FAIL line with its timing; the lines are printed
in the pytest terminal summary, or directly when this file is run as a
script (``python3 tests/test_acceptance.py``).
"""
import itertools
import math
import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from qflag.dirac import nabla, verify_gradient_suite
from qflag.ncalg import STRATEGIES, algebra, complete_rules, sphere_element, star
from qflag.qmetric import (EdgeSum, QState, counit_state, edge_length, envelope, haar_state,
                           hk_moment_exact, hk_state, lip_bound_check, mk_closed_form, mk_lp,
                           psi_bound_check, random_qfunction, tail_length)
from qflag.scalar import Q, ScalarQ
from qflag.verify import run_suite, suite_forms

RESULTS: dict[int, str] = {}
QS = (0.3, 0.5, 0.7)


@contextmanager
def criterion(num: int, title: str, budget: float):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget:.0f}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        RESULTS[num] = f"criterion {num:2d} {status}  {elapsed:7.2f}s / {budget:5.0f}s  {title}"


def no_failures(checks):
    bad = [c for c in checks if c.status == "fail"]
    assert not bad, [c.as_dict() for c in bad[:3]]
    return [c for c in checks if c.status == "pass"]


def test_c01_unitarity():
    with criterion(1, "unitarity relations vanish, N=2,3", 60):
        for N in (2, 3):
            passed = no_failures(run_suite("unitarity", N))
            assert len(passed) == 4 * N * N


def test_c02_sphere_relations():
    with criterion(2, "odd sphere relations vanish, N=2,3", 60):
        for N in (2, 3):
            assert no_failures(run_suite("sphere", N))


def test_c03_rmatrix():
    with criterion(3, "R-matrix intertwiner, all r, N=2,3", 5):
        for N in (2, 3):
            assert len(no_failures(run_suite("rmatrix", N))) == N - 1


def test_c04_gradient_identity():
    with criterion(4, "sum of squared gradients of y_ell, ell=1,2", 120):
        for N in (2, 3):
            alg = algebra(N)
            y = sphere_element(alg, "y", N - 1)
            total = sum((star(nabla(i, y)) * nabla(i, y) for i in range(1, N)), alg.zero())
            diff = total - y * (1 - y * Q * Q) * ScalarQ.q_pow(-1)
            assert diff.is_zero()


def test_c05_commutation_rules():
    with criterion(5, "gradient commutation rules and a_k product, N=2,3", 120):
        for N in (2, 3):
            checks = verify_gradient_suite(N)
            ids = {c.check_id for c in no_failures(checks)}
            assert {"z-commutes-nabla", "zstar-commutes-nabla", "x-q2-nabla-x",
                    "x-q2-nabla-y", "y-q2-nabla-y"} <= ids
            ak = [c for c in run_suite("sphere", N) if c.check_id == "a_k-product"]
            assert len(ak) == 3 and all(c.status == "pass" for c in ak)


def test_c06_forms():
    with criterion(6, "dbar^2 = 0, Omega preserved, commutator formula, M=-1,0,1", 300):
        for N in (2, 3):
            checks = no_failures(suite_forms(N))
            ids = {c.check_id for c in checks}
            assert {"dbar-squared", "dbar-dag-squared", "dbar-preserves-omega",
                    "dbar-dag-preserves-omega", "dbar-commutator"} <= ids
            Ms = {c.witness.get("M") for c in checks if c.check_id == "dbar-squared"}
            assert Ms == {-1, 0, 1}


def test_c07_haar_n2():
    with criterion(7, "rank-2 Haar state, modular property, transpose", 60):
        checks = no_failures(run_suite("haar", 2))
        ids = {c.check_id for c in checks}
        assert {"haar-left-invariant", "haar-right-invariant", "haar-action", "modular",
                "haar-transpose", "transpose-intertwining"} <= ids


def test_c08_lipschitz():
    rng = random.Random(8)
    with criterion(8, "Lipschitz estimate, 1000 trials per q", 10):
        for q in QS:
            pts = list(range(31)) + [None]
            for _ in range(1000):
                f = random_qfunction(rng, q, 30, scale=rng.choice((0.1, 1.0, 10.0)))
                assert lip_bound_check(f, rng.choice(pts), rng.choice(pts))


def test_c09_psi_approximation():
    rng = random.Random(9)
    with criterion(9, "truncation bound, 1000 functions, levels 0..10", 10):
        for trial in range(1000):
            q = QS[trial % 3]
            f = random_qfunction(rng, q, 30)
            for level in range(11):
                assert psi_bound_check(f, level)


def random_state(rng, q, T, exact=False):
    if exact:
        w = [Fraction(rng.randint(0, 9)) for _ in range(T + 2)]
        w[rng.randrange(T + 2)] += 1
    else:
        w = [rng.random() ** 3 for _ in range(T + 2)]
    s = sum(w)
    w = [x / s for x in w]
    return QState(q, tuple(w[:-1]), w[-1])


def test_c10_mk_oracle():
    rng = random.Random(10)
    with criterion(10, "chain formula equals LP value (500 float, 50 exact)", 120):
        for _ in range(500):
            q = rng.choice(QS)
            T = rng.randint(0, 40)
            a, b = random_state(rng, q, T), random_state(rng, q, T)
            assert abs(mk_closed_form(a, b) - mk_lp(a, b)) <= 1e-9
        for _ in range(50):
            q = rng.choice((Fraction(3, 10), Fraction(1, 2), Fraction(7, 10)))
            T = rng.randint(0, 6)
            a, b = random_state(rng, q, T, True), random_state(rng, q, T, True)
            assert mk_closed_form(a, b) == mk_lp(a, b, "exact")


def test_c11_convergence_to_counit():
    with criterion(11, "mk(h_k, eps) decreasing and under the envelope; moments", 60):
        for q in QS:
            base = haar_state(q, 60)
            eps = counit_state(q)
            vals = [mk_closed_form(hk_state(k, base), eps) for k in range(7)]
            assert all(a > b for a, b in zip(vals, vals[1:]))
            for k, v in enumerate(vals):
                assert v <= envelope(q, k, 60 + k) * (1 + 1e-12)
        for q in (Fraction(3, 10), Fraction(1, 2), Fraction(7, 10)):
            for k, m in itertools.product(range(7), repeat=2):
                assert hk_moment_exact(q, k, m) <= q ** (2 * k * m)


def test_c12_finite_diameter():
    with criterion(12, "diameter of truncated state space within the chain length", 10):
        for q in QS:
            T = 60
            length = sum(edge_length(q, m) for m in range(T + 1)) + tail_length(q, T)
            points = [QState(q, tuple(float(i == m) for i in range(T + 1)), 0.0) for m in range(T + 1)]
            points.append(counit_state(q, T))
            diam = max(mk_closed_form(a, b) for a, b in itertools.combinations(points, 2))
            assert diam <= length * (1 + 1e-12)
            assert math.isfinite(mk_closed_form(haar_state(q, T), counit_state(q, T)))
        q = Fraction(1, 2)
        T = 8
        points = [QState(q, tuple(Fraction(i == m) for i in range(T + 1)), Fraction(0)) for m in range(T + 1)]
        points.append(counit_state(q, T))
        chain = EdgeSum(q, {**{m: 1 for m in range(T + 1)}, ("tail", T): 1})
        assert all(mk_closed_form(a, b) <= chain for a, b in itertools.combinations(points, 2))


def random_poly(rng, N, deg):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        w = tuple(rng.randrange(N * N) for _ in range(rng.randint(0, deg)))
        terms[w] = ScalarQ.q_pow(rng.randint(-2, 2), rng.randint(-3, 3) or 1)
    return terms


def test_c13_confluence():
    rng = random.Random(13)
    with criterion(13, "100 random polynomials, two strategies agree with the PBW engine", 120):
        systems = {N: complete_rules(N, 6) for N in (2, 3)}
        for trial in range(100):
            N = 2 if trial % 2 else 3
            raw = random_poly(rng, N, 6)
            forms = [systems[N].rewrite(raw, s) for s in STRATEGIES]
            assert forms[0] == forms[1] == algebra(N).reduce(raw)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c") and callable(fn):
            try:
                fn()
            except Exception as exc:  # report and keep going
                failed += 1
                print(f"{name}: {exc!r}", file=sys.stderr)
    for num in sorted(RESULTS):
        print(RESULTS[num])
    sys.exit(1 if failed else 0)
