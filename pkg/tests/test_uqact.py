import itertools

import pytest

from qflag.ncalg import algebra, counit, star
from qflag.scalar import ONE, Q, QINV, ScalarQ
from qflag.uqact import (E, ExtVector, F, K, Kinv, UqElement, act_d, act_d_pairing, act_del,
                         eps_q, eps_q_dag, f_chain, m_element, n_element, pairing, pi_rep,
                         sigma, sigma_rep, uq_antipode, uq_antipode_inv, uq_coproduct,
                         uq_counit, verify_rmatrix)

S = ScalarQ.s_pow(1)


def corpus(N, d):
    alg = algebra(N)
    return [alg.reduce({w: ONE}) for k in range(d + 1)
            for w in itertools.product(range(N * N), repeat=k)]


def test_representation():
    assert pi_rep(E(2, 1)) == [[0, 0], [1, 0]]
    assert pi_rep(K(2, 1)) == [[S.inverse(), 0], [0, S]]
    assert pi_rep(K(2, 1) * Kinv(2, 1)) == [[1, 0], [0, 1]]


def test_hopf_structure():
    d = uq_coproduct(F(2, 1))
    assert d == {((("F", 1),), (("K", 1),)): ONE, ((("Ki", 1),), (("F", 1),)): ONE}
    assert uq_counit(E(2, 1)) == 0 and uq_counit(K(2, 1)) == 1
    assert uq_antipode(K(2, 1)) == Kinv(2, 1)
    for g in (E(3, 2), F(3, 1), K(3, 1)):
        assert uq_antipode(uq_antipode_inv(g)) == g


def test_pairing(A2):
    u = A2.u
    assert pairing(E(2, 1), u(2, 1)) == 1
    assert pairing(K(2, 1), u(1, 1)) == S.inverse()
    x = u(1, 1) * u(2, 2) + u(1, 2)
    assert pairing(UqElement.one(2), x) == counit(x)


@pytest.mark.parametrize("N,r", [(2, 1), (3, 1), (3, 2)])
def test_rmatrix(N, r):
    assert verify_rmatrix(r, N)


def test_action_generators(A2):
    u = A2.u
    assert act_d(K(2, 1), u(1, 1)) == u(1, 1) * S
    assert act_d(E(2, 1), u(2, 1)) == u(1, 1) * -QINV
    assert act_d(F(2, 1), u(1, 2)) == u(2, 2) * -Q
    assert act_del(K(2, 1), u(2, 1)) == u(2, 1) * S.inverse()
    x = u(2, 1) * u(1, 2)
    assert act_del(UqElement.one(2), x) == x


@pytest.mark.parametrize("N", [2, 3])
def test_action_matches_pairing_oracle(N):
    gens = [UqElement.gen(N, k, r) for k in ("E", "F", "K", "Ki") for r in range(1, N)]
    for x in corpus(N, 2):
        for g in gens:
            assert act_d(g, x) == act_d_pairing(g, x)


def test_words_act_right_to_left():
    N = 3
    alg = algebra(N)
    for x in corpus(N, 1):
        for a, b in itertools.product([E(N, 1), F(N, 2), K(N, 1)], repeat=2):
            assert act_d(a * b, x) == act_d(a, act_d(b, x))
            assert act_d_pairing(a * b, x) == act_d(a, act_d(b, x))
    assert act_d(E(N, 1), alg.one()) == 0


def test_star_compatibility():
    for x in corpus(2, 2):
        assert act_d(E(2, 1), star(x)) == star(act_d(F(2, 1), x)) * -QINV
        assert act_d(K(2, 1), star(x)) == star(act_d(Kinv(2, 1), x))


def test_exterior_operators():
    assert eps_q(1, ExtVector.basis(1, ())) == ExtVector.basis(1, (1,))
    assert eps_q(2, ExtVector.basis(2, (1,))) == ExtVector.basis(2, (1, 2)) * -QINV
    assert eps_q(1, ExtVector.basis(1, (1,))) == ExtVector(1)
    # q-anticommutation, nilpotency, and adjointness for the orthonormal basis e_I
    zero = ExtVector(2)
    basis = [(), (1,), (2,), (1, 2)]
    for I in basis:
        v = ExtVector.basis(2, I)
        assert eps_q(2, eps_q(1, v)) == eps_q(1, eps_q(2, v)) * -QINV
        for j in (1, 2):
            assert eps_q(j, eps_q(j, v)) == zero
            for J in basis:
                w = ExtVector.basis(2, J)
                assert eps_q(j, v).terms.get(J, 0) == eps_q_dag(j, w).terms.get(I, 0)


def test_sigma():
    assert sigma_rep is sigma
    assert sigma(E(3, 1), ExtVector.basis(2, (2,))) == ExtVector.basis(2, (1,))
    assert sigma(K(3, 1), ExtVector.basis(2, (1,))) == ExtVector.basis(2, (1,)) * S
    assert sigma(E(3, 1), ExtVector.basis(2, ())) == ExtVector(2)


def test_recursion_elements():
    assert m_element(1, 2) == E(2, 1)
    assert m_element(1, 3) == E(3, 1) * E(3, 2) - E(3, 2) * E(3, 1) * QINV
    assert n_element(2, 3) == K(3, 2)
    assert f_chain(1, 3) == F(3, 1) * F(3, 2)
