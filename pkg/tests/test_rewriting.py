import random

import pytest

from qflag.ncalg import STRATEGIES, algebra, complete_rules, format_poly, star
from qflag.scalar import ONE


@pytest.fixture(scope="module")
def sys2():
    return complete_rules(2, 6)


@pytest.fixture(scope="module")
def sys3():
    return complete_rules(3, 6)


def test_bound_below_two_rejected():
    with pytest.raises(ValueError):
        complete_rules(2, 0)


def test_rules_decrease(sys3):
    for lhs, rhs in sys3.rules.items():
        assert all(sys3.key(w) < sys3.key(lhs) for w in rhs)


def test_frozen_example_both_strategies():
    R = complete_rules(2, 4)
    word = {(3, 0): ONE}  # u22 u11
    outs = {format_poly(R.rewrite(word, s)) for s in STRATEGIES}
    assert outs == {"1 + q^-1*u[1,2]*u[2,1]"}


def test_unitarity_via_rules(sys2):
    alg = algebra(2)
    s = sum((star(alg.u(k, 1)) * alg.u(k, 1) for k in (1, 2)), alg.zero())
    assert sys2.rewrite(s) == 1


@pytest.mark.parametrize("N", [2, 3])
def test_strategies_and_engine_agree(N, sys2, sys3, rng):
    R = sys2 if N == 2 else sys3
    alg = algebra(N)
    for _ in range(40):
        w = tuple(rng.randrange(N * N) for _ in range(rng.randint(0, 6)))
        forms = [R.rewrite({w: ONE}, s) for s in STRATEGIES]
        assert forms[0] == forms[1] == alg.reduce({w: ONE})


def test_normal_words_are_irreducible(sys3):
    alg = algebra(3)
    p = alg.u(3, 3) ** 2 * alg.u(1, 2) * alg.u(2, 1)
    assert all(sys3.is_normal(w) for w in p.terms)


def test_unknown_strategy(sys2):
    with pytest.raises(ValueError):
        sys2.rewrite({(0, 1): ONE}, "sideways")


@pytest.mark.slow
def test_rank_four_agreement():
    R = complete_rules(4, 5)
    alg = algebra(4)
    rng = random.Random(4)
    for _ in range(20):
        w = tuple(rng.randrange(16) for _ in range(rng.randint(0, 5)))
        assert R.rewrite({w: ONE}, "left-outermost") == R.rewrite({w: ONE}, "right-innermost") \
            == alg.reduce({w: ONE})
