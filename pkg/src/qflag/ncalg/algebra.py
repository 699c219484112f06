"""Normal forms in the quantum group algebra O(SU_q(N)).

Generators ``u[i,j]`` are encoded as integers ``(i-1)*N + (j-1)``, so integer
order is the row-major generator order.  A word is a tuple of such integers.

The quadratic relations of the quantum matrix algebra O(M_q(N)) straighten
any word into a sorted word (a PBW basis).  The quantum determinant is central
there, so the only additional relation ``D = 1`` is handled by eliminating one
copy of every diagonal generator at a time.  The monomial order is

    (degree, -diagonal weight, row-major lex)

where the diagonal weight of a word is the sum of ``(i - j)**2`` over its
letters.  Every straightening correction and every non-identity term of ``D``
has strictly larger weight than what it replaces, so this order makes the
whole system terminating.  Normal words are the sorted words that do not
contain every diagonal generator.
"""
from __future__ import annotations

import itertools
import sys
from functools import lru_cache

from ..scalar import ONE, ZERO, ScalarQ, as_scalar

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class BoundExceeded(Exception):
    """Raised when a polynomial exceeds the configured degree bound."""


def _acc(out: dict, word, coef):
    c = out.get(word)
    c = coef if c is None else c + coef
    if c:
        out[word] = c
    else:
        out.pop(word, None)


def inversions(perm) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


class SUq:
    """The algebra O(SU_q(N)) with a cached normal-form engine.

    Use :func:`algebra` to obtain the shared instance for a given rank.
    """

    def __init__(self, N: int, degree_bound: int | None = None):
        if N < 2:
            raise ValueError("rank N must be at least 2")
        self.N = N
        self.degree_bound = degree_bound
        self.diag = tuple(i * N + i for i in range(N))
        self._swap = self._swap_table()
        self._mq_cache: dict = {}
        self._sl_cache: dict = {}
        self._nf_cache: dict = {}
        self._det_mq = self._mq_reduce(self._det_raw())
        self.misc_cache: dict = {}

    # ---- letters --------------------------------------------------------

    def letter(self, i: int, j: int) -> int:
        N = self.N
        if not (1 <= i <= N and 1 <= j <= N):
            raise IndexError(f"u[{i},{j}] out of range for N={N}")
        return (i - 1) * N + (j - 1)

    def indices(self, x: int) -> tuple[int, int]:
        a, b = divmod(x, self.N)
        return a + 1, b + 1

    def weight(self, word) -> int:
        N = self.N
        return sum((x // N - x % N) ** 2 for x in word)

    def order_key(self, word):
        return (len(word), -self.weight(word), tuple(word))

    def _swap_table(self) -> dict:
        N = self.N
        qi = ScalarQ.q_pow(-1)
        corr = -(ScalarQ.q_pow(1) - qi)
        table = {}
        for x in range(N * N):
            for y in range(x):
                a, b = divmod(x, N)
                c, d = divmod(y, N)
                if a == c or b == d:
                    table[x, y] = ((qi, (y, x)),)
                elif b < d:
                    table[x, y] = ((ONE, (y, x)),)
                else:
                    table[x, y] = ((ONE, (y, x)), (corr, (c * N + b, a * N + d)))
        return table

    def _det_raw(self) -> dict:
        N = self.N
        mq = ScalarQ.q_pow(1) * -1
        raw = {}
        for perm in itertools.permutations(range(N)):
            word = tuple(perm[k] * N + k for k in range(N))
            raw[word] = mq ** inversions(perm)
        return raw

    # ---- quantum matrix algebra (no determinant relation) ---------------

    def _mq_lmul(self, x: int, w: tuple) -> dict:
        if not w or x <= w[0]:
            return {(x,) + w: ONE}
        key = (x, w)
        hit = self._mq_cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        rest = w[1:]
        for coef, (a, b) in self._swap[x, w[0]]:
            for w2, c2 in self._mq_lmul(b, rest).items():
                for w3, c3 in self._mq_lmul(a, w2).items():
                    _acc(out, w3, coef * c2 * c3)
        self._mq_cache[key] = out
        return out

    def _mq_mul_words(self, w1: tuple, w2: tuple) -> dict:
        cur = {w2: ONE}
        for x in reversed(w1):
            nxt: dict = {}
            for w, c in cur.items():
                for w3, c3 in self._mq_lmul(x, w).items():
                    _acc(nxt, w3, c * c3)
            cur = nxt
        return cur

    def _mq_reduce(self, raw: dict) -> dict:
        out: dict = {}
        for word, coef in raw.items():
            for w, c in self._mq_mul_words(word, ()).items():
                _acc(out, w, coef * c)
        return out

    # ---- SU_q(N) ----------------------------------------------------------

    def _reducible(self, w: tuple) -> bool:
        return all(d in w for d in self.diag)

    def _nf_sorted(self, w: tuple) -> dict:
        """Normal form of a sorted word."""
        if not self._reducible(w):
            return {w: ONE}
        hit = self._nf_cache.get(w)
        if hit is not None:
            return hit
        rest = list(w)
        for d in self.diag:
            rest.remove(d)
        rest = tuple(rest)
        prod: dict = {}
        for t, c in self._det_mq.items():
            for w2, c2 in self._mq_mul_words(rest, t).items():
                _acc(prod, w2, c * c2)
        lead = prod.pop(w)
        inv = lead.inverse()
        out: dict = {}
        for w2, c2 in self._nf_sorted(rest).items():
            _acc(out, w2, inv * c2)
        for t, c in prod.items():
            for w2, c2 in self._nf_sorted(t).items():
                _acc(out, w2, -inv * c * c2)
        self._nf_cache[w] = out
        return out

    def lmul(self, x: int, w: tuple) -> dict:
        """Normal form of ``u_x * w`` for a normal word ``w``."""
        if not w or x <= w[0]:
            return self._nf_sorted((x,) + w)
        key = (x, w)
        hit = self._sl_cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        rest = w[1:]
        for coef, (a, b) in self._swap[x, w[0]]:
            for w2, c2 in self.lmul(b, rest).items():
                for w3, c3 in self.lmul(a, w2).items():
                    _acc(out, w3, coef * c2 * c3)
        self._sl_cache[key] = out
        return out

    def lmul_terms(self, x: int, terms: dict) -> dict:
        out: dict = {}
        for w, c in terms.items():
            for w2, c2 in self.lmul(x, w).items():
                _acc(out, w2, c * c2)
        return out

    def mul_terms(self, left: dict, right: dict) -> dict:
        out: dict = {}
        for w1, c1 in left.items():
            cur = right
            for x in reversed(w1):
                cur = self.lmul_terms(x, cur)
            for w, c in cur.items():
                _acc(out, w, c1 * c)
        return out

    def reduce_terms(self, raw) -> dict:
        """Normal form of a linear combination of arbitrary words."""
        items = raw.items() if isinstance(raw, dict) else raw
        out: dict = {}
        for word, coef in items:
            word = tuple(self.letter(*x) if isinstance(x, tuple) else x for x in word)
            self.check_bound(len(word))
            cur = {(): ONE}
            for x in reversed(word):
                cur = self.lmul_terms(x, cur)
            coef = as_scalar(coef)
            for w, c in cur.items():
                _acc(out, w, coef * c)
        return out

    def check_bound(self, degree: int):
        if self.degree_bound is not None and degree > self.degree_bound:
            raise BoundExceeded(f"degree {degree} exceeds bound {self.degree_bound}")

    # ---- constructors -----------------------------------------------------

    def poly(self, terms: dict) -> "NCPoly":
        return NCPoly(self, terms)

    def reduce(self, raw) -> "NCPoly":
        return NCPoly(self, self.reduce_terms(raw))

    def u(self, i: int, j: int) -> "NCPoly":
        return NCPoly(self, {(self.letter(i, j),): ONE})

    def scalar(self, c) -> "NCPoly":
        c = as_scalar(c)
        return NCPoly(self, {(): c} if c else {})

    def one(self) -> "NCPoly":
        return self.scalar(1)

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def __repr__(self):
        return f"SUq(N={self.N})"


@lru_cache(maxsize=None)
def algebra(N: int) -> SUq:
    """Shared algebra instance (caches are per instance)."""
    return SUq(N)


class NCPoly:
    """Element of O(SU_q(N)) stored as ``{normal word: ScalarQ}``.

    Treat instances as immutable; arithmetic returns new objects.
    """

    __slots__ = ("alg", "terms", "_hash")

    def __init__(self, alg: SUq, terms: dict):
        self.alg = alg
        self.terms = terms
        self._hash = None

    @property
    def N(self) -> int:
        return self.alg.N

    def _lift(self, other):
        if isinstance(other, NCPoly):
            if other.alg.N != self.alg.N:
                raise ValueError("rank mismatch")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NCPoly(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            if other.alg.N != self.alg.N:
                raise ValueError("rank mismatch")
            return NCPoly(self.alg, self.alg.mul_terms(self.terms, other.terms))
        c = as_scalar(other)
        if not c:
            return NCPoly(self.alg, {})
        return NCPoly(self.alg, {w: v * c for w, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * (ONE / as_scalar(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.alg.N == other.alg.N and self.terms == other.terms
        try:
            return self.terms == self.alg.scalar(other).terms
        except TypeError:
            return False

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alg.N, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def constant(self) -> ScalarQ:
        return self.terms.get((), ZERO)

    def words(self):
        """Terms as ``(((i, j), ...), coeff)`` in printing order."""
        ix = self.alg.indices
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            yield tuple(ix(x) for x in w), self.terms[w]

    def map_coeffs(self, f) -> "NCPoly":
        out = {}
        for w, c in self.terms.items():
            c2 = f(c)
            if c2:
                out[w] = c2
        return NCPoly(self.alg, out)

    def star(self) -> "NCPoly":
        from .hopf import star
        return star(self)

    def __str__(self):
        from .printing import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"NCPoly[N={self.alg.N}]({self})"
