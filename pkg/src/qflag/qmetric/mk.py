"""Monge-Kantorovich distances for the gradient seminorm on I_q.

The unit ball ``L_grad(f) <= 1`` bounds every jump ``|f(q^2m) - f(q^2(m+1))|``
by the edge length ``e_m = q^2m (1 - q^2) / sqrt(G(q^2m))`` and nothing else,
so the interval behaves like a weighted path graph.  The distance then has
the usual closed form of a one-dimensional transport problem,
``sum_m e_m |C_m|`` with ``C_m`` the cumulative mass difference.  The last
node ``T`` is joined to the atom at ``0`` by everything below it, an edge of
length ``sum_{j >= T} e_j``.

Exact mode (rational ``q``) keeps the answer as an :class:`EdgeSum`, a
rational combination of edge lengths, so no square root is ever rounded.
"""
from __future__ import annotations

import csv
import io
import math
from decimal import Decimal, localcontext
from fractions import Fraction

from .interval import g_func
from .simplex import simplex_max_exact, simplex_max_float
from .states import QState

TAIL = "tail"


def edge_length_sq(q, m: int):
    x = q ** (2 * m)
    return (x * (1 - q * q)) ** 2 / g_func(q, x)


def edge_length(q, m: int) -> float:
    return math.sqrt(float(edge_length_sq(q, m)))


def tail_length(q, T: int) -> float:
    """``sum_{j > T} e_j``; bounded by ``e_T q / (1 - q)``."""
    q = float(q)
    out, j = 0.0, T + 1
    while True:
        e = edge_length(q, j)
        out += e
        if e < 1e-18 * max(out, 1e-300):
            return out
        j += 1


def envelope(q, k: int, T: int) -> float:
    """``sum_{m >= k} e_m``."""
    return sum(edge_length(q, m) for m in range(k, T + 1)) + tail_length(q, T)


class EdgeSum:
    """Rational combination of edge lengths ``e_0 .. e_T`` and the tail sum."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: Fraction, coeffs: dict | None = None):
        self.q = q
        self.coeffs = {k: Fraction(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def edge(cls, q, m) -> "EdgeSum":
        return cls(q, {m: 1})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return EdgeSum(self.q, out)

    __radd__ = __add__

    def __neg__(self):
        return EdgeSum(self.q, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Fraction(c)
        return EdgeSum(self.q, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.coeffs
        return isinstance(other, EdgeSum) and self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, frozenset(self.coeffs.items())))

    def decimal(self, prec: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = prec + 10
            out = Decimal(0)
            for k, v in self.coeffs.items():
                out += Decimal(v.numerator) / Decimal(v.denominator) * _edge_decimal(self.q, k, prec)
            return out

    def __float__(self):
        return float(self.decimal(30))

    def sign(self) -> int:
        """Sign of the real number, decided at increasing precision."""
        if not self.coeffs:
            return 0
        for prec in (50, 120, 300):
            v = self.decimal(prec)
            if abs(v) > Decimal(10) ** (-(prec - 10)):
                return 1 if v > 0 else -1
        return 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __repr__(self):
        body = " + ".join(f"{v}*e[{k}]" for k, v in sorted(self.coeffs.items(), key=str))
        return f"EdgeSum({body or 0})"


_EDGE_CACHE: dict = {}


def _edge_decimal(q: Fraction, k, prec: int) -> Decimal:
    key = (q, k, prec)
    hit = _EDGE_CACHE.get(key)
    if hit is not None:
        return hit
    with localcontext() as ctx:
        ctx.prec = prec + 10
        if k == TAIL:
            raise ValueError("tail needs its truncation level")
        if isinstance(k, tuple):  # (TAIL, T)
            T = k[1]
            out, j = Decimal(0), T + 1
            while True:
                e = _edge_decimal(q, j, prec)
                out += e
                if e < Decimal(10) ** (-(prec + 5)):
                    break
                j += 1
        else:
            sq = edge_length_sq(q, k)
            out = (Decimal(sq.numerator) / Decimal(sq.denominator)).sqrt()
    _EDGE_CACHE[key] = out
    return out


def _tail_key(T: int):
    return (TAIL, T)


def _aligned(mu: QState, nu: QState):
    if mu.q != nu.q:
        raise ValueError("states use different q")
    T = max(mu.T, nu.T)
    return mu.retruncate(T), nu.retruncate(T), T


def cumulative(mu: QState, nu: QState) -> list:
    mu, nu, T = _aligned(mu, nu)
    out, acc = [], 0
    for a, b in zip(mu.weights, nu.weights):
        acc += a - b
        out.append(acc)
    return out


def mk_closed_form(mu: QState, nu: QState):
    """Chain formula; ``EdgeSum`` for rational ``q``, float otherwise."""
    C = cumulative(mu, nu)
    T = len(C) - 1
    q = mu.q
    if isinstance(q, Fraction):
        coeffs = {m: abs(c) for m, c in enumerate(C)}
        coeffs[_tail_key(T)] = abs(C[T])
        return EdgeSum(q, coeffs)
    out = sum(edge_length(q, m) * abs(c) for m, c in enumerate(C))
    return out + tail_length(q, T) * abs(C[T])


def _lp_data(mu: QState, nu: QState):
    """Maximize ``mu(f) - nu(f)`` over ``|f_m - f_{m+1}| <= e_m``, ``f(0) = 0``.

    Each free value ``f_m`` is split as ``f_m^+ - f_m^-``.
    """
    mu, nu, T = _aligned(mu, nu)
    n = T + 1
    c = [a - b for a, b in zip(mu.weights, nu.weights)]
    c = c + [-v for v in c]
    rows, rhs = [], []
    for m in range(n):
        for sign in (1, -1):
            row = [0] * (2 * n)
            row[m], row[n + m] = sign, -sign
            if m < T:
                row[m + 1], row[n + m + 1] = -sign, sign
                rhs.append(m)
            else:
                rhs.append("last")
            rows.append(row)
    return c, rows, rhs, T


def mk_lp(mu: QState, nu: QState, mode: str | None = None):
    """LP oracle over the polytope of admissible ``f`` (independent of the chain formula)."""
    q = mu.q
    if mode is None:
        mode = "exact" if isinstance(q, Fraction) else "float"
    c, rows, rhs, T = _lp_data(mu, nu)
    if mode == "exact":
        q = Fraction(q)
        b = []
        for r in rhs:
            if r == "last":
                b.append(EdgeSum(q, {T: 1, _tail_key(T): 1}))
            else:
                b.append(EdgeSum.edge(q, r))
        zero = EdgeSum(q)
        return simplex_max_exact([Fraction(x) for x in c], rows, b, zero)
    tail = tail_length(q, T)
    b = [edge_length(q, T) + tail if r == "last" else edge_length(q, r) for r in rhs]
    return simplex_max_float([float(x) for x in c], rows, b)


def mk_table(states: list, T: int, fmt: str = "{:.12g}") -> str:
    """CSV of pairwise distances for the given states."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["q", "k", "state_a", "state_b", "mk_upper", "tail_bound", "T"])
    tail = tail_length(states[0].q, T)
    for i, a in enumerate(states):
        for b in states[i:]:
            val = float(mk_closed_form(a.retruncate(T), b.retruncate(T)))
            k = a.label[1:] if a.label.startswith("h") else ""
            w.writerow([fmt.format(float(a.q)), k, a.label, b.label, fmt.format(val),
                        fmt.format(tail), T])
    return buf.getvalue()
