"""The quantized enveloping algebra U_q(su(N)) and its actions.

Elements are linear combinations of words in the letters ``("E", r)``,
``("F", r)``, ``("K", r)`` and ``("Ki", r)`` (the inverse of ``K_r``).  No
normal form is imposed on U_q itself; identities are checked through
representations and through the actions on O(SU_q(N)).
"""
from __future__ import annotations

from collections.abc import Iterable

from .ncalg.algebra import NCPoly, SUq, _acc
from .ncalg.hopf import coproduct
from .scalar import ONE, ZERO, ScalarQ, as_scalar

KINDS = ("E", "F", "K", "Ki")
_S_INV = {"E": ("E", -1), "F": ("F", 1)}  # S^{-1}(E) = -q^{-1} E, S^{-1}(F) = -q F


class UqElement:
    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict | None = None):
        self.N = N
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, N: int, kind: str, r: int) -> "UqElement":
        if kind not in KINDS:
            raise ValueError(f"unknown generator {kind!r}")
        if not 1 <= r <= N - 1:
            raise IndexError(f"generator index {r} out of range for N={N}")
        return cls(N, {((kind, r),): ONE})

    @classmethod
    def word(cls, N: int, letters: Iterable, coeff=1) -> "UqElement":
        letters = tuple(letters)
        for kind, r in letters:
            if kind not in KINDS or not 1 <= r <= N - 1:
                raise ValueError(f"bad letter {(kind, r)} for N={N}")
        return cls(N, {letters: as_scalar(coeff)})

    @classmethod
    def one(cls, N: int) -> "UqElement":
        return cls(N, {(): ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return UqElement(self.N, out)

    def __neg__(self):
        return UqElement(self.N, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UqElement):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    _acc(out, w1 + w2, c1 * c2)
            return UqElement(self.N, out)
        c = as_scalar(other)
        return UqElement(self.N, {w: v * c for w, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        return isinstance(other, UqElement) and self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def star(self) -> "UqElement":
        swap = {"E": "F", "F": "E", "K": "K", "Ki": "Ki"}
        out = {}
        for w, c in self.terms.items():
            out[tuple((swap[k], r) for k, r in reversed(w))] = c
        return UqElement(self.N, out)

    def __repr__(self):
        parts = []
        for w, c in self.terms.items():
            mono = "*".join(f"{k}[{r}]" for k, r in w) or "1"
            parts.append(f"({c})*{mono}")
        return "UqElement(" + " + ".join(parts) + ")"


def E(N, r):
    return UqElement.gen(N, "E", r)


def F(N, r):
    return UqElement.gen(N, "F", r)


def K(N, r):
    return UqElement.gen(N, "K", r)


def Kinv(N, r):
    return UqElement.gen(N, "Ki", r)


# ---- Hopf structure ---------------------------------------------------------

def _letter_coproduct(letter):
    kind, r = letter
    if kind in ("K", "Ki"):
        return [(ONE, (letter,), (letter,))]
    return [(ONE, (letter,), (("K", r),)), (ONE, (("Ki", r),), (letter,))]


def uq_coproduct(eta: UqElement) -> dict:
    """``{(word1, word2): coeff}``."""
    out: dict = {}
    for w, c in eta.terms.items():
        cur = {((), ()): c}
        for letter in w:
            nxt: dict = {}
            for (a, b), v in cur.items():
                for c2, l1, l2 in _letter_coproduct(letter):
                    _acc(nxt, (a + l1, b + l2), v * c2)
            cur = nxt
        for k, v in cur.items():
            _acc(out, k, v)
    return out


def uq_counit(eta: UqElement) -> ScalarQ:
    out = ZERO
    for w, c in eta.terms.items():
        if all(k in ("K", "Ki") for k, _ in w):
            out = out + c
    return out


def _antipode(eta: UqElement, inverse: bool) -> UqElement:
    out: dict = {}
    for w, c in eta.terms.items():
        coef = c
        letters = []
        for kind, r in reversed(w):
            if kind == "K":
                letters.append(("Ki", r))
            elif kind == "Ki":
                letters.append(("K", r))
            else:
                # S(E) = -q E, S(F) = -q^{-1} F; the inverse flips the exponent
                e = 1 if kind == "E" else -1
                coef = coef * ScalarQ.q_pow(-e if inverse else e) * -1
                letters.append((kind, r))
        _acc(out, tuple(letters), coef)
    return UqElement(eta.N, out)


def uq_antipode(eta: UqElement) -> UqElement:
    return _antipode(eta, inverse=False)


def uq_antipode_inv(eta: UqElement) -> UqElement:
    return _antipode(eta, inverse=True)


# ---- fundamental representation and its tensor powers ---------------------

def _kappa(r: int, j: int) -> int:
    """``pi(K_r) e_j = s^kappa e_j``."""
    return (j == r + 1) - (j == r)


def _letter_on_tensor(letter, vec: dict) -> dict:
    kind, r = letter
    out: dict = {}
    for idx, c in vec.items():
        if kind in ("K", "Ki"):
            e = sum(_kappa(r, j) for j in idx)
            _acc(out, idx, c * ScalarQ.s_pow(e if kind == "K" else -e))
            continue
        src, dst = (r, r + 1) if kind == "E" else (r + 1, r)
        for p, j in enumerate(idx):
            if j != src:
                continue
            e = -sum(_kappa(r, i) for i in idx[:p]) + sum(_kappa(r, i) for i in idx[p + 1:])
            _acc(out, idx[:p] + (dst,) + idx[p + 1:], c * ScalarQ.s_pow(e))
    return out


def tensor_action(eta: UqElement, vec: dict) -> dict:
    """Action of ``eta`` on a vector of a tensor power of the fundamental module."""
    out: dict = {}
    for w, c in eta.terms.items():
        cur = vec
        for letter in reversed(w):
            cur = _letter_on_tensor(letter, cur)
            if not cur:
                break
        for k, v in cur.items():
            _acc(out, k, c * v)
    return out


def pi_rep(eta: UqElement) -> list[list[ScalarQ]]:
    N = eta.N
    mat = [[ZERO] * N for _ in range(N)]
    for j in range(1, N + 1):
        for (i,), c in tensor_action(eta, {(j,): ONE}).items():
            mat[i - 1][j - 1] = c
    return mat


def tensor_matrix(eta: UqElement, power: int) -> dict:
    """Sparse matrix ``{(row, col): coeff}`` of ``eta`` on the ``power``-fold tensor product."""
    import itertools
    N = eta.N
    out = {}
    for col in itertools.product(range(1, N + 1), repeat=power):
        for row, c in tensor_action(eta, {col: ONE}).items():
            out[row, col] = c
    return out


def pairing(eta: UqElement, p: NCPoly) -> ScalarQ:
    """Dual pairing ``<eta, p>`` (matrix coefficients of tensor powers)."""
    if eta.N != p.alg.N:
        raise ValueError("rank mismatch")
    alg = p.alg
    out = ZERO
    for w, c in p.terms.items():
        if not w:
            out = out + c * uq_counit(eta)
            continue
        rows = tuple(alg.indices(x)[0] for x in w)
        cols = tuple(alg.indices(x)[1] for x in w)
        v = tensor_action(eta, {cols: ONE}).get(rows)
        if v:
            out = out + c * v
    return out


def r_hat(N: int) -> dict:
    """Braided R-matrix of the fundamental representation, ``{(row, col): coeff}``."""
    q = ScalarQ.q_pow(1)
    out = {}
    for i in range(1, N + 1):
        out[(i, i), (i, i)] = q
        for j in range(1, N + 1):
            if i < j:
                out[(i, j), (i, j)] = q - ScalarQ.q_pow(-1)
            if i != j:
                out[(i, j), (j, i)] = ONE
    return out


def _matmul(a: dict, b: dict) -> dict:
    by_row: dict = {}
    for (k, j), c in b.items():
        by_row.setdefault(k, []).append((j, c))
    out: dict = {}
    for (i, k), c in a.items():
        for j, c2 in by_row.get(k, ()):
            _acc(out, (i, j), c * c2)
    return out


def verify_rmatrix(r: int, N: int) -> bool:
    """``R_hat`` commutes with the two-fold coproduct of ``E_r``, ``F_r``, ``K_r``."""
    R = r_hat(N)
    for kind in ("E", "F", "K"):
        M = tensor_matrix(UqElement.gen(N, kind, r), 2)
        if _matmul(R, M) != _matmul(M, R):
            return False
    return True


# ---- actions on O(SU_q(N)) ------------------------------------------------

def _k_exponent(alg: SUq, r: int, w: tuple) -> int:
    """``d_{K_r}`` multiplies the word ``w`` by ``s`` to this power."""
    e = 0
    for x in w:
        i = x // alg.N + 1
        e += (i == r) - (i == r + 1)
    return e


def _d_letter_word(alg: SUq, letter, w: tuple) -> dict:
    key = ("d", letter, w)
    hit = alg.misc_cache.get(key)
    if hit is not None:
        return hit
    kind, r = letter
    N = alg.N
    if kind in ("K", "Ki"):
        e = _k_exponent(alg, r, w)
        out = {w: ScalarQ.s_pow(e if kind == "K" else -e)}
    else:
        # twisted Leibniz: d(x y) = d(x) d_{K^-1}(y) + d_K(x) d(y)
        src, shift, coef = (r + 1, -1, ScalarQ.q_pow(-1) * -1) if kind == "E" \
            else (r, 1, ScalarQ.q_pow(1) * -1)
        out = {}
        for p, x in enumerate(w):
            i, j = divmod(x, N)
            if i + 1 != src:
                continue
            e = _k_exponent(alg, r, w[:p]) - _k_exponent(alg, r, w[p + 1:])
            new = (i + shift) * N + j
            cur = {w[p + 1:]: ONE}
            cur = alg.lmul_terms(new, cur)
            for y in reversed(w[:p]):
                cur = alg.lmul_terms(y, cur)
            c = coef * ScalarQ.s_pow(e)
            for w2, c2 in cur.items():
                _acc(out, w2, c * c2)
    alg.misc_cache[key] = out
    return out


def act_letter(letter, p: NCPoly) -> NCPoly:
    alg = p.alg
    out: dict = {}
    for w, c in p.terms.items():
        for w2, c2 in _d_letter_word(alg, letter, w).items():
            _acc(out, w2, c * c2)
    return NCPoly(alg, out)


def act_d(eta: UqElement, p: NCPoly) -> NCPoly:
    """Left action ``d_eta``; a word acts letter by letter from the right."""
    if eta.N != p.alg.N:
        raise ValueError("rank mismatch")
    out = p.alg.zero()
    for w, c in eta.terms.items():
        cur = p
        for letter in reversed(w):
            cur = act_letter(letter, cur)
            if cur.is_zero():
                break
        out = out + cur * c
    return out


def act_d_pairing(eta: UqElement, p: NCPoly) -> NCPoly:
    """``d_eta`` from its defining formula through the coproduct and the pairing."""
    sinv = uq_antipode_inv(eta)
    return coproduct(p).slice(0, lambda x: pairing(sinv, x))


def act_del(eta: UqElement, p: NCPoly) -> NCPoly:
    """Right-leg action ``(1 (x) <eta, .>) Delta`` used for the transpose identity."""
    if p.alg.N != 2:
        raise ValueError("the transpose identity is only supported for N = 2")
    return coproduct(p).slice(1, lambda x: pairing(eta, x))


# ---- exterior algebra ---------------------------------------------------------

class ExtVector:
    """Vector in the exterior algebra on ``ell`` generators, ``{I: coeff}``."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell: int, terms: dict | None = None):
        self.ell = ell
        self.terms = {tuple(sorted(I)): c for I, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, ell: int, I) -> "ExtVector":
        return cls(ell, {tuple(sorted(I)): ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for I, c in other.terms.items():
            _acc(out, I, c)
        return ExtVector(self.ell, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        c = as_scalar(c)
        return ExtVector(self.ell, {I: v * c for I, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ExtVector) and self.terms == other.terms

    def __repr__(self):
        return f"ExtVector({self.terms})"


def _eps_coeff(j: int, I: tuple) -> ScalarQ:
    return (ScalarQ.q_pow(1) * -1) ** -sum(1 for i in I if i <= j)


def eps_q(j: int, v: ExtVector) -> ExtVector:
    """Twisted exterior multiplication by the ``j``-th generator."""
    out: dict = {}
    for I, c in v.terms.items():
        if j in I:
            continue
        _acc(out, tuple(sorted(I + (j,))), c * _eps_coeff(j, I))
    return ExtVector(v.ell, out)


def eps_q_dag(j: int, v: ExtVector) -> ExtVector:
    """Adjoint of :func:`eps_q` for the inner product with orthonormal ``e_I``."""
    out: dict = {}
    for J, c in v.terms.items():
        if j not in J:
            continue
        I = tuple(i for i in J if i != j)
        _acc(out, I, c * _eps_coeff(j, I))
    return ExtVector(v.ell, out)


def _sigma_letter(letter, I: tuple):
    kind, r = letter
    if kind in ("K", "Ki"):
        e = (r in I) - (r + 1 in I)
        return I, ScalarQ.s_pow(e if kind == "K" else -e)
    src, dst = (r + 1, r) if kind == "E" else (r, r + 1)
    if src in I and dst not in I:
        return tuple(sorted(set(I) - {src} | {dst})), ONE
    return None, ZERO


def sigma(eta: UqElement, v: ExtVector) -> ExtVector:
    """Representation of ``U_q(su(ell))`` on the exterior algebra."""
    for w in eta.terms:
        for _, r in w:
            if r >= v.ell:
                raise ValueError(f"sigma is only defined for generator index < {v.ell}")
    out: dict = {}
    for w, c in eta.terms.items():
        for I, c0 in v.terms.items():
            cur, coef = I, c * c0
            for letter in reversed(w):
                cur, f = _sigma_letter(letter, cur)
                if cur is None:
                    break
                coef = coef * f
            if cur is not None:
                _acc(out, cur, coef)
    return ExtVector(v.ell, out)


def m_element(i: int, N: int) -> UqElement:
    """``M_ell = E_ell``, ``M_i = E_i M_{i+1} - q^{-1} M_{i+1} E_i``."""
    ell = N - 1
    if not 1 <= i <= ell:
        raise IndexError(i)
    m = E(N, ell)
    for k in range(ell - 1, i - 1, -1):
        e = E(N, k)
        m = e * m - m * e * ScalarQ.q_pow(-1)
    return m


def n_element(i: int, N: int) -> UqElement:
    """``N_i = K_i K_{i+1} ... K_ell``."""
    ell = N - 1
    if not 1 <= i <= ell:
        raise IndexError(i)
    return UqElement.word(N, [("K", k) for k in range(i, ell + 1)])


def f_chain(i: int, N: int) -> UqElement:
    """``F_i F_{i+1} ... F_ell``."""
    return UqElement.word(N, [("F", k) for k in range(i, N)])


sigma_rep = sigma
