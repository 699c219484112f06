"""States on C(I_q): finitely supported measures plus an atom at ``0``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .interval import QFunction, _num


@dataclass(frozen=True)
class QState:
    q: object
    weights: tuple  # mass at q^(2m), m = 0..T
    atom: object    # mass at 0
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))

    @property
    def T(self) -> int:
        return len(self.weights) - 1

    def total(self):
        return sum(self.weights) + self.atom

    def __call__(self, f: QFunction):
        return sum(w * f.at(m) for m, w in enumerate(self.weights)) + self.atom * f.tail

    def moment(self, n: int):
        """Expectation of ``y^n``."""
        q = self.q
        out = sum(w * q ** (2 * m * n) for m, w in enumerate(self.weights))
        return out + (self.atom if n == 0 else 0)

    def retruncate(self, T: int) -> "QState":
        if T < self.T:
            raise ValueError("cannot shrink the support of a state")
        zero = _num(self.q, 0)
        return QState(self.q, self.weights + (zero,) * (T - self.T), self.atom, self.label)


def haar_state(q, T: int) -> QState:
    """Haar state restricted to C(I_q); the mass beyond level ``T`` sits at ``0``."""
    one = _num(q, 1)
    q2 = q * q
    w = tuple((one - q2) * q2 ** j for j in range(T + 1))
    return QState(q, w, q2 ** (T + 1), "h0")


def counit_state(q, T: int = 0) -> QState:
    zero = _num(q, 0)
    return QState(q, (zero,) * (T + 1), _num(q, 1), "eps")


def a_k(q, k: int, x):
    """``prod_{j=1..k} (1 - q^(2j) x)``."""
    out = _num(q, 1)
    for j in range(1, k + 1):
        out *= 1 - q ** (2 * j) * x
    return out


def hk_state(k: int, base: QState, q=None) -> QState:
    """The state ``h_k`` pushed to the interval.

    ``h_k(f) = h(a_k f(q^2k .)) / h(a_k)``: the base weight at ``q^2j`` is
    multiplied by ``a_k(q^2j)`` and moved to ``q^(2(k+j))``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if q is not None and q != base.q:
        raise ValueError("q differs from the base state")
    q = base.q
    zero = _num(q, 0)
    moved = [w * a_k(q, k, q ** (2 * j)) for j, w in enumerate(base.weights)]
    total = sum(moved) + base.atom
    weights = (zero,) * k + tuple(m / total for m in moved)
    return QState(q, weights, base.atom / total, f"h{k}")


def haar_moment(q, n: int):
    """``h(y^n) = (1 - q^2) / (1 - q^(2(n+1)))`` for the untruncated Haar state."""
    one = _num(q, 1)
    return (one - q * q) / (one - q ** (2 * (n + 1)))


def hk_moment_exact(q, k: int, m: int):
    """``h_k(y^m) = q^(2km) h(a_k y^m) / h(a_k)`` without truncation.

    ``a_k`` is expanded as a polynomial in ``y`` so only base moments occur.
    """
    poly = [_num(q, 1)]
    for j in range(1, k + 1):
        c = q ** (2 * j)
        nxt = poly + [_num(q, 0)]
        for i, a in enumerate(poly):
            nxt[i + 1] -= c * a
        poly = nxt
    num = sum(a * haar_moment(q, i + m) for i, a in enumerate(poly))
    den = sum(a * haar_moment(q, i) for i, a in enumerate(poly))
    return q ** (2 * k * m) * num / den


def parse_state(name: str, q, T: int) -> QState:
    name = name.strip()
    if name == "eps":
        return counit_state(q, T)
    if name.startswith("h") and name[1:].isdigit():
        k = int(name[1:])
        return hk_state(k, haar_state(q, T)) if k else haar_state(q, T)
    raise ValueError(f"unknown state {name!r}; use eps or h<k>")


def exact_q(q) -> Fraction:
    return q if isinstance(q, Fraction) else Fraction(str(q))
