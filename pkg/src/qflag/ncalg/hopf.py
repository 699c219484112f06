"""Hopf *-structure of O(SU_q(N)): minors, star, coproduct, counit, antipode."""
from __future__ import annotations

import itertools

from ..scalar import ONE, ZERO, ScalarQ
from .algebra import NCPoly, SUq, _acc, inversions


def quantum_minor(alg: SUq, rows, cols) -> NCPoly:
    """Quantum minor for row set ``rows`` and column set ``cols`` (1-based)."""
    rows, cols = sorted(rows), sorted(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    if not rows:
        return alg.one()
    mq = ScalarQ.q_pow(1) * -1
    raw = {}
    for perm in itertools.permutations(range(len(rows))):
        word = tuple(alg.letter(rows[perm[k]], cols[k]) for k in range(len(rows)))
        raw[word] = raw.get(word, ZERO) + mq ** inversions(perm)
    return alg.reduce(raw)


def cofactor(alg: SUq, i: int, j: int) -> NCPoly:
    """The entry of the inverse matrix, ``S(u_ij)``."""
    key = ("cofactor", i, j)
    hit = alg.misc_cache.get(key)
    if hit is None:
        full = range(1, alg.N + 1)
        minor = quantum_minor(alg, [k for k in full if k != j], [k for k in full if k != i])
        hit = minor * (ScalarQ.q_pow(1) * -1) ** (i - j)
        alg.misc_cache[key] = hit
    return hit


def _antihom(p: NCPoly, image, tag: str) -> NCPoly:
    """Apply the anti-multiplicative map determined by ``image(letter)``."""
    alg = p.alg
    out: dict = {}
    for w, c in p.terms.items():
        key = (tag, w)
        val = alg.misc_cache.get(key)
        if val is None:
            cur = {(): ONE}
            # anti-homomorphism: image(x1...xd) = image(xd) ... image(x1)
            for x in w:
                cur = alg.mul_terms(image(x).terms, cur)
            val = cur
            alg.misc_cache[key] = val
        for w2, c2 in val.items():
            _acc(out, w2, c * c2)
    return NCPoly(alg, out)


def star(p: NCPoly) -> NCPoly:
    """The *-involution; scalars are real so only the word order flips."""
    alg = p.alg

    def image(x):
        i, j = alg.indices(x)
        return cofactor(alg, j, i)
    return _antihom(p, image, "star")


def antipode(p: NCPoly) -> NCPoly:
    alg = p.alg

    def image(x):
        return cofactor(alg, *alg.indices(x))
    return _antihom(p, image, "antipode")


def counit(p: NCPoly) -> ScalarQ:
    alg = p.alg
    out = ZERO
    for w, c in p.terms.items():
        if all(alg.indices(x)[0] == alg.indices(x)[1] for x in w):
            out = out + c
    return out


class Tensor:
    """Element of a tensor power of the algebra, ``{(w1, ..., wk): coeff}``."""

    __slots__ = ("alg", "terms", "arity")

    def __init__(self, alg: SUq, terms: dict, arity: int | None = None):
        self.alg = alg
        self.terms = terms
        if arity is None:
            arity = len(next(iter(terms))) if terms else 2
        self.arity = arity

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.terms == other.terms

    def __repr__(self):
        return f"Tensor(arity={self.arity}, terms={len(self.terms)})"

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return Tensor(self.alg, out, self.arity)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, -c)
        return Tensor(self.alg, out, self.arity)

    def legs(self) -> int:
        return self.arity

    def slice(self, leg: int, functional) -> "Tensor | NCPoly":
        """Contract ``leg`` against a scalar-valued map on NCPoly."""
        alg = self.alg
        out: dict = {}
        for key, c in self.terms.items():
            v = functional(NCPoly(alg, {key[leg]: ONE}))
            if v:
                _acc(out, key[:leg] + key[leg + 1:], c * v)
        if self.arity == 2:
            return NCPoly(alg, {k[0]: v for k, v in out.items()})
        return Tensor(alg, out, self.arity - 1)

    def map_leg(self, leg: int, f) -> "Tensor":
        """Apply a linear map ``NCPoly -> NCPoly`` (or ``-> Tensor``) on one leg."""
        alg = self.alg
        out: dict = {}
        arity = self.arity
        for key, c in self.terms.items():
            img = f(NCPoly(alg, {key[leg]: ONE}))
            if isinstance(img, Tensor):
                arity = self.arity + img.arity - 1
                for k2, c2 in img.terms.items():
                    _acc(out, key[:leg] + k2 + key[leg + 1:], c * c2)
            else:
                for w2, c2 in img.terms.items():
                    _acc(out, key[:leg] + (w2,) + key[leg + 1:], c * c2)
        return Tensor(alg, out, arity)

    def multiply(self) -> NCPoly:
        alg = self.alg
        out: dict = {}
        for key, c in self.terms.items():
            cur = {key[-1]: ONE}
            for w in reversed(key[:-1]):
                cur = alg.mul_terms({w: ONE}, cur)
            for w, c2 in cur.items():
                _acc(out, w, c * c2)
        return NCPoly(alg, out)


def _coproduct_word(alg: SUq, w: tuple) -> dict:
    key = ("coproduct", w)
    hit = alg.misc_cache.get(key)
    if hit is not None:
        return hit
    N = alg.N
    cur = {((), ()): ONE}
    for x in reversed(w):
        i, j = alg.indices(x)
        nxt: dict = {}
        for (l, r), c in cur.items():
            for k in range(1, N + 1):
                left = alg.lmul(alg.letter(i, k), l)
                right = alg.lmul(alg.letter(k, j), r)
                for w1, c1 in left.items():
                    for w2, c2 in right.items():
                        _acc(nxt, (w1, w2), c * c1 * c2)
        cur = nxt
    alg.misc_cache[key] = cur
    return cur


def coproduct(p: NCPoly) -> Tensor:
    alg = p.alg
    out: dict = {}
    for w, c in p.terms.items():
        for k, c2 in _coproduct_word(alg, w).items():
            _acc(out, k, c * c2)
    return Tensor(alg, out, 2)


def sphere_element(alg: SUq, kind: str, index: int) -> NCPoly:
    """Generators of the quantum sphere inside O(SU_q(N)).

    ``kind`` is one of ``z``, ``zs`` (the adjoint of ``z``), ``x`` or ``y``.
    """
    N = alg.N
    if kind == "z":
        return alg.u(N, index)
    if kind in ("zs", "z*"):
        return star(alg.u(N, index))
    if kind == "x":
        z = alg.u(N, index)
        return z * star(z)
    if kind == "y":
        if not 1 <= index <= N:
            raise IndexError(index)
        out = alg.zero()
        for i in range(1, index + 1):
            out = out + sphere_element(alg, "x", i)
        return out
    raise ValueError(f"unknown sphere element kind {kind!r}")
