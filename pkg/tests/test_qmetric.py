import math
import random
from fractions import Fraction

import numpy as np
import pytest

from qflag.ncalg import algebra, haar_n2, sphere_element, star
from qflag.qmetric import (EdgeSum, QFunction, QState, a_k, c_q, counit_state, diff_d, diff_e,
                           edge_length, envelope, g_func, g_function, haar_moment, haar_state,
                           haar_state_iq, hk_moment_exact, hk_state, lip_bound_check,
                           mk_closed_form, mk_lp, mk_lp_oracle, mk_table, parse_state,
                           projection_derivative_check, psi_approx, psi_error, psi_bound_check,
                           random_qfunction, seminorm_grad, tail_length)
from qflag.qmetric.simplex import Unbounded, simplex_max_exact, simplex_max_float

H = Fraction(1, 2)


def ident(q, T):
    return QFunction.from_callable(q, lambda x: x, T)


def test_g_and_difference_quotients():
    q = H
    assert g_function is g_func
    assert g_func(q, 0) == 0
    assert g_func(q, 1) == (1 - q * q) / q
    assert g_func(q, q * q) == q * (1 - q ** 4)
    p0 = QFunction.projection(q, 0, 5)
    assert diff_d(p0).at(0) == 1 / (1 - q * q)
    assert diff_e(p0).at(1) == 1 / (1 - q * q)
    const = QFunction(q, (Fraction(3),) * 6, Fraction(3))
    assert all(v == 0 for v in diff_d(const).values)


def test_seminorm_examples():
    q = H
    assert seminorm_grad(QFunction(q, (Fraction(1),) * 4, Fraction(1))) == 0
    assert seminorm_grad(ident(q, 30)) == pytest.approx(math.sqrt(1.5))
    p0 = QFunction.projection(q, 0, 10)
    assert seminorm_grad(p0) == pytest.approx(math.sqrt(1.5) / 0.75)


def test_lipschitz_examples(rng):
    q = H
    p0 = QFunction.projection(q, 0, 10)
    assert lip_bound_check(p0, 0, 1)
    const = QFunction(q, (Fraction(2),) * 3, Fraction(2))
    assert lip_bound_check(const, 0, None)
    for _ in range(50):
        f = random_qfunction(rng, q, 12)
        pts = list(range(13)) + [None]
        assert lip_bound_check(f, rng.choice(pts), rng.choice(pts))


def test_psi_examples():
    q = H
    f = ident(q, 20)
    g = psi_approx(f, 0)
    assert set(g.values) == {1} and g.tail == 1
    assert psi_approx(f, 2).at(3) == q ** 4
    assert psi_error(f, 3) == Fraction(1, 64)
    assert float(psi_error(f, 3)) <= c_q(0.5) * 0.125 * math.sqrt(1.5)
    assert psi_bound_check(f, 3)
    const = QFunction(q, (Fraction(5, 3),) * 8, Fraction(5, 3))
    assert psi_error(const, 0) == 0
    with pytest.raises(ValueError):
        psi_approx(f, -1)


def test_projection_derivatives():
    for m in (0, 3):
        assert projection_derivative_check(m, H, 8)
        assert projection_derivative_check(m, 0.3, 8)
    with pytest.raises(ValueError):
        projection_derivative_check(9, H, 8)


def test_haar_state_examples():
    q = H
    h = haar_state_iq(q, 40)
    assert h.weights[0] == 1 - q * q
    assert h.total() == 1
    assert abs(h.moment(1) - 1 / (1 + q * q)) < q ** (4 * 40)
    assert haar_moment(q, 1) == 1 / (1 + q * q)


def test_counit_state():
    q = H
    eps = counit_state(q)
    assert eps(ident(q, 5)) == 0
    assert eps(QFunction(q, (Fraction(1),) * 3, Fraction(1))) == 1
    assert eps(QFunction.projection(q, 0, 5)) == 0


def test_hk_state():
    q = H
    base = haar_state(q, 30)
    assert hk_state(0, base) == base
    h3 = hk_state(3, base)
    assert h3.weights[:3] == (0, 0, 0) and h3.total() == 1
    for k in range(4):
        for m in range(4):
            assert hk_state(k, base).moment(m) <= q ** (2 * k * m)
            assert hk_moment_exact(q, k, m) <= q ** (2 * k * m)
    with pytest.raises(ValueError):
        hk_state(-1, base)
    with pytest.raises(ValueError):
        hk_state(1, base, Fraction(1, 3))


def test_hk_moments_match_symbolic_haar():
    """h_k(y^m) = h((z2*)^k y^m z2^k) / h((z2*)^k z2^k) at rank 2."""
    alg = algebra(2)
    z2 = sphere_element(alg, "z", 2)
    y = sphere_element(alg, "y", 1)
    zs2 = star(z2)
    for k in range(3):
        den = haar_n2(zs2 ** k * z2 ** k)
        for m in range(3):
            num = haar_n2(zs2 ** k * y ** m * z2 ** k)
            val = (num / den).at_q(Fraction(1, 2))
            assert val == pytest.approx(float(hk_moment_exact(H, k, m)), rel=1e-12)
    # the a_k identity used in the reduction
    assert a_k(H, 2, Fraction(1)) == (1 - H ** 2) * (1 - H ** 4)


def test_edge_and_single_edge_distance():
    q = 0.5
    assert edge_length(q, 0) == pytest.approx(math.sqrt(3 / 8))
    d1, d2 = QState(q, (1.0, 0.0), 0.0), QState(q, (0.0, 1.0), 0.0)
    assert mk_closed_form(d1, d2) == pytest.approx(0.61237, abs=1e-5)
    assert mk_lp(d1, d2) == pytest.approx(edge_length(q, 0), abs=1e-12)
    assert mk_lp_oracle is mk_lp


def random_state(rng, q, T, exact=False):
    if exact:
        w = [Fraction(rng.randint(0, 9)) for _ in range(T + 2)]
        w[rng.randrange(T + 2)] += 1
    else:
        w = [rng.random() for _ in range(T + 2)]
    s = sum(w)
    w = [x / s for x in w]
    return QState(q, tuple(w[:-1]), w[-1])


def test_metric_axioms(rng):
    q = 0.4
    for _ in range(40):
        T = rng.randint(0, 12)
        a, b, c = (random_state(rng, q, T) for _ in range(3))
        assert mk_closed_form(a, a) == 0
        assert mk_closed_form(a, b) == pytest.approx(mk_closed_form(b, a), abs=1e-15)
        assert mk_closed_form(a, c) <= mk_closed_form(a, b) + mk_closed_form(b, c) + 1e-12
        assert mk_closed_form(a, b) > 0 or a == b


def test_exact_mode_roundtrip(rng):
    q = Fraction(3, 5)
    for _ in range(8):
        T = rng.randint(0, 5)
        a, b = random_state(rng, q, T, True), random_state(rng, q, T, True)
        v = mk_closed_form(a, b)
        assert isinstance(v, EdgeSum)
        assert v == mk_lp(a, b)
        assert float(v) == pytest.approx(mk_closed_form(a.__class__(0.6, tuple(map(float, a.weights)), float(a.atom)),
                                                        b.__class__(0.6, tuple(map(float, b.weights)), float(b.atom))))


def test_edgesum_sign():
    q = H
    e0, e1 = EdgeSum.edge(q, 0), EdgeSum.edge(q, 1)
    assert (e0 - e1).sign() == 1 and e1 < e0 and (e0 - e0).sign() == 0
    assert e0 * 2 - e0 == e0


def test_lp_against_scipy(rng):
    linprog = pytest.importorskip("scipy.optimize").linprog
    q = 0.5
    for _ in range(15):
        T = rng.randint(0, 10)
        a, b = random_state(rng, q, T), random_state(rng, q, T)
        n = T + 1
        # variables f_0..f_T, f(0) = 0; bounds on consecutive differences
        A, ub = [], []
        for m in range(n):
            row = np.zeros(n)
            row[m] = 1
            if m < T:
                row[m + 1] = -1
                e = edge_length(q, m)
            else:
                e = edge_length(q, T) + tail_length(q, T)
            A += [row, -row]
            ub += [e, e]
        c = -(np.array(a.weights) - np.array(b.weights))
        res = linprog(c, A_ub=np.array(A), b_ub=np.array(ub), bounds=[(None, None)] * n)
        assert -res.fun == pytest.approx(mk_lp(a, b), abs=1e-9)
        assert -res.fun == pytest.approx(mk_closed_form(a, b), abs=1e-9)


def test_simplex_small():
    # max x + y s.t. x <= 1, y <= 2
    assert simplex_max_float([1, 1], [[1, 0], [0, 1]], [1, 2]) == pytest.approx(3)
    assert simplex_max_exact([Fraction(1), Fraction(1)], [[1, 0], [0, 1]],
                             [Fraction(1), Fraction(2)], Fraction(0)) == 3
    with pytest.raises(Unbounded):
        simplex_max_float([1, 0], [[0, 1]], [1])


def test_convergence_and_envelope():
    for q in (0.3, 0.5, 0.7):
        base = haar_state(q, 60)
        eps = counit_state(q)
        vals = [mk_closed_form(hk_state(k, base), eps) for k in range(7)]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        for k, v in enumerate(vals):
            assert v <= envelope(q, k, 60 + k) * (1 + 1e-12)


def test_parse_state_and_table():
    q = 0.5
    assert parse_state("eps", q, 4).atom == 1
    assert parse_state("h2", q, 4).label == "h2"
    with pytest.raises(ValueError):
        parse_state("mu", q, 4)
    text = mk_table([parse_state(n, q, 10) for n in ("h0", "eps")], 10)
    lines = text.strip().splitlines()
    assert lines[0] == "q,k,state_a,state_b,mk_upper,tail_bound,T"
    assert lines[-1].split(",")[4] == "0"


def test_random_functions_are_lipschitz_scaled():
    rng = random.Random(3)
    for q in (0.3, 0.5, 0.7):
        for _ in range(10):
            assert 0 < seminorm_grad(random_qfunction(rng, q, 40)) <= 1 + 1e-12
