"""Haar state at rank 2 and the maps built from it.

Rank 2 uses the identification ``u11 = a*``, ``u12 = -q b``, ``u21 = b*``,
``u22 = a``.  The Haar state kills every monomial with nonzero torus charge,
so on a normal word only ``u12^k u21^k`` survives.
"""
from __future__ import annotations

from ..scalar import ONE, ZERO, ScalarQ
from .algebra import NCPoly, SUq, _acc, algebra
from .hopf import coproduct


def _haar_word(alg: SUq, w: tuple) -> ScalarQ:
    u12, u21 = alg.letter(1, 2), alg.letter(2, 1)
    b = w.count(u12)
    if len(w) != 2 * b or w.count(u21) != b:
        return ZERO
    q2 = ScalarQ.q_pow(2)
    return (ScalarQ.q_pow(1) * -1) ** b * (1 - q2) / (1 - q2 ** (b + 1))


def haar_n2(p: NCPoly) -> ScalarQ:
    if p.alg.N != 2:
        raise ValueError("closed-form Haar state is only available for N = 2")
    out = ZERO
    for w, c in p.terms.items():
        v = _haar_word(p.alg, w)
        if v:
            out = out + c * v
    return out


def modular_theta(p: NCPoly) -> NCPoly:
    """Automorphism with ``h(x y) = h(y theta(x))``; diagonal on normal words."""
    alg = p.alg
    N = alg.N
    out = {}
    for w, c in p.terms.items():
        e = sum(i + j - N - 1 for i, j in map(alg.indices, w))
        out[w] = c * ScalarQ.q_pow(2 * e)
    return NCPoly(alg, out)


def transpose_n2(p: NCPoly) -> NCPoly:
    """Algebra automorphism ``u_ij -> q^(j-i) u_ji`` at rank 2."""
    alg = p.alg
    if alg.N != 2:
        raise ValueError("transpose map is only defined here for N = 2")
    out: dict = {}
    for w, c in p.terms.items():
        coef = c
        raw = []
        for x in w:
            i, j = alg.indices(x)
            coef = coef * ScalarQ.q_pow(j - i)
            raw.append(alg.letter(j, i))
        for w2, c2 in alg.reduce_terms({tuple(raw): coef}).items():
            _acc(out, w2, c2)
    return NCPoly(alg, out)


class LaurentW:
    """Laurent polynomial in a unitary ``w`` with ``h(w^n) = [n == 0]``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {n: c for n, c in terms.items() if c}

    def haar(self) -> ScalarQ:
        return self.terms.get(0, ZERO)

    def __eq__(self, other):
        return isinstance(other, LaurentW) and self.terms == other.terms

    def __repr__(self):
        return "LaurentW(" + " + ".join(f"({c})*w^{n}" for n, c in sorted(self.terms.items())) + ")"


def phi_project(p: NCPoly):
    """Restriction to the block-diagonal subgroup.

    For N >= 3 the result lives in O(SU_q(N-1)); for N = 2 it is a
    :class:`LaurentW`.
    """
    alg = p.alg
    N = alg.N
    if N == 2:
        out: dict = {}
        for w, c in p.terms.items():
            n = 0
            for x in w:
                i, j = alg.indices(x)
                if i != j:
                    break
                n += 1 if i == 1 else -1
            else:
                out[n] = out.get(n, ZERO) + c
        return LaurentW(out)
    small = algebra(N - 1)
    raw: dict = {}
    for w, c in p.terms.items():
        word = []
        for x in w:
            i, j = alg.indices(x)
            if i < N and j < N:
                word.append(small.letter(i, j))
            elif i != j:
                break
        else:
            _acc(raw, tuple(word), c)
    return small.reduce(raw)


def haar_phi(x: NCPoly) -> ScalarQ:
    """Haar state of the subgroup composed with the restriction map."""
    img = phi_project(x)
    if isinstance(img, LaurentW):
        return img.haar()
    if img.alg.N != 2:
        raise ValueError("conditional expectation needs N <= 3")
    return haar_n2(img)


def cond_expectation(p: NCPoly) -> NCPoly:
    """``E = (1 (x) h Phi) Delta``, the projection onto the quantum projective space."""
    return coproduct(p).slice(1, haar_phi)


def as_polynomial_in(p: NCPoly, y: NCPoly, max_degree: int):
    """Coefficients ``c`` with ``p == sum c[k] y^k``, or ``None``.

    Plain Gauss-Jordan elimination over the words that occur.
    """
    alg = p.alg
    basis: list = []  # [pivot word, vector, combination of powers]

    def eliminate(vec, comb):
        for piv, bv, bc in basis:
            c = vec.terms.get(piv)
            if c:
                f = c / bv.terms[piv]
                vec = vec - bv * f
                for k, v in bc.items():
                    comb[k] = comb.get(k, ZERO) - v * f
        return vec, comb

    pw = alg.one()
    for k in range(max_degree + 1):
        if k:
            pw = pw * y
        vec, comb = eliminate(pw, {k: ONE})
        if vec.is_zero():
            continue
        piv = max(vec.terms, key=alg.order_key)
        for entry in basis:
            c = entry[1].terms.get(piv)
            if c:
                f = c / vec.terms[piv]
                entry[1] = entry[1] - vec * f
                for kk, v in comb.items():
                    entry[2][kk] = entry[2].get(kk, ZERO) - v * f
        basis.append([piv, vec, comb])
    rem, comb = eliminate(p, {})
    if not rem.is_zero():
        return None
    return [-comb.get(k, ZERO) for k in range(max_degree + 1)]
