"""Functions on the quantized interval ``I_q = {q^(2m)} U {0}``.

A :class:`QFunction` stores the values at ``q^(2m)`` for ``m = 0..T`` and one
tail value used for every smaller point, including ``0``.  Arithmetic is
exact when ``q`` is a :class:`~fractions.Fraction` and floating otherwise.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction


def _num(q, x):
    return Fraction(x) if isinstance(q, Fraction) else float(x)


@dataclass(frozen=True)
class QFunction:
    q: object
    values: tuple
    tail: object

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise ValueError("q must lie in (0, 1)")
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def T(self) -> int:
        return len(self.values) - 1

    @classmethod
    def projection(cls, q, m: int, T: int) -> "QFunction":
        """Indicator of the point ``q^(2m)``."""
        one, zero = _num(q, 1), _num(q, 0)
        return cls(q, tuple(one if k == m else zero for k in range(T + 1)), zero)

    @classmethod
    def from_callable(cls, q, f, T: int) -> "QFunction":
        return cls(q, tuple(f(q ** (2 * m)) for m in range(T + 1)), f(_num(q, 0)))

    def at(self, m) -> object:
        """Value at ``q^(2m)``; ``m=None`` is the point ``0``."""
        if m is None or m > self.T:
            return self.tail
        if m < 0:
            raise IndexError("points above 1 are not in the interval")
        return self.values[m]

    def point(self, m):
        return _num(self.q, 0) if m is None else self.q ** (2 * m)

    def sup_norm(self):
        return max(abs(v) for v in self.values + (self.tail,))

    def __sub__(self, other: "QFunction") -> "QFunction":
        T = max(self.T, other.T)
        return QFunction(self.q, tuple(self.at(m) - other.at(m) for m in range(T + 1)),
                         self.tail - other.tail)


def g_func(q, x):
    """``G(x) = q^-1 x (1 - q^2 x)``."""
    return x * (1 - q * q * x) / q


def diff_d(f: QFunction) -> QFunction:
    """``D(f)(x) = (f(x) - f(q^2 x)) / (x (1 - q^2))`` at ``m = 0..T+1``; zero below."""
    q = f.q
    vals = []
    for m in range(f.T + 2):
        x = q ** (2 * m)
        vals.append((f.at(m) - f.at(m + 1)) / (x * (1 - q * q)))
    return QFunction(q, tuple(vals), _num(q, 0))


def diff_e(f: QFunction) -> QFunction:
    """``E(f)(x) = D(f)(q^-2 x)`` with ``f(q^-2) = 0``."""
    q = f.q
    d = diff_d(f)
    first = -q * q * f.at(0) / (1 - q * q)
    return QFunction(q, (first,) + d.values, _num(q, 0))


def grad_sq_terms(f: QFunction) -> list:
    """``G(q^2m) D(f)(q^2m)^2`` for ``m = 0..T+1`` (exact for rational q)."""
    d = diff_d(f)
    q = f.q
    return [g_func(q, q ** (2 * m)) * d.values[m] ** 2 for m in range(f.T + 2)]


def seminorm_grad_sq(f: QFunction):
    return max(grad_sq_terms(f))


def seminorm_grad(f: QFunction) -> float:
    """``L_grad(f) = sup_m sqrt(G) |D f|`` over the sample points."""
    return math.sqrt(seminorm_grad_sq(f))


def c_q_sq(q):
    return (1 + q) / (1 - q)


def c_q(q) -> float:
    return math.sqrt(float(c_q_sq(q)))


def _sqrt_point(q, m):
    return _num(q, 0) if m is None else q ** m


def lip_bound_check(f: QFunction, m1, m2) -> bool:
    """``|f(x) - f(y)| <= C_q |sqrt x - sqrt y| L_grad(f)`` at two points.

    Points are indices (``None`` is ``0``).  Decided on squares, so the check
    is exact for rational ``q``.
    """
    q = f.q
    lhs = (f.at(m1) - f.at(m2)) ** 2
    rhs = c_q_sq(q) * (_sqrt_point(q, m1) - _sqrt_point(q, m2)) ** 2 * seminorm_grad_sq(f)
    if isinstance(q, Fraction):
        return lhs <= rhs
    return lhs <= rhs * (1 + 1e-12) + 1e-300


def psi_approx(f: QFunction, level: int) -> QFunction:
    """Freeze ``f`` below ``q^(2 level)``."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    if level >= f.T:
        return f
    v = f.values[level]
    return QFunction(f.q, f.values[:level + 1] + (v,) * (f.T - level), v)


def psi_error(f: QFunction, level: int):
    return (f - psi_approx(f, level)).sup_norm()


def psi_bound_check(f: QFunction, level: int) -> bool:
    """``||f - Psi_level f|| <= C_q q^level L_grad(f)``, decided on squares."""
    q = f.q
    lhs = psi_error(f, level) ** 2
    rhs = c_q_sq(q) * q ** (2 * level) * seminorm_grad_sq(f)
    if isinstance(q, Fraction):
        return lhs <= rhs
    return lhs <= rhs * (1 + 1e-12) + 1e-300


def projection_derivative_check(m: int, q, T: int) -> bool:
    """Difference quotients of the indicator ``p_m`` and their intertwining.

    Checks the closed forms ``D(p_m) = (p_m - q^2 p_{m-1}) / (q^2m (1 - q^2))``
    and ``E(p_m) = (p_{m+1} - q^2 p_m) / (q^2m (1 - q^2))`` (with ``p_{-1} = 0``)
    pointwise, and ``E(f)(q^2 x) = D(f)(x)``, which is what moving a function
    of ``y`` across the gradient of ``y`` amounts to.
    """
    if not 0 <= m <= T:
        raise ValueError("projection index out of range")
    p = lambda k: QFunction.projection(q, k, T + 2) if 0 <= k <= T + 2 else \
        QFunction(q, (_num(q, 0),) * (T + 3), _num(q, 0))
    scale = q ** (2 * m) * (1 - q * q)
    pm, pm1, pp1 = QFunction.projection(q, m, T), p(m - 1), p(m + 1)
    d, e = diff_d(pm), diff_e(pm)
    for k in range(T + 2):
        want_d = (pm.at(k) - q * q * pm1.at(k)) / scale
        want_e = (pp1.at(k) - q * q * pm.at(k)) / scale
        if not (_close(d.at(k), want_d) and _close(e.at(k), want_e)):
            return False
        if not _close(e.at(k + 1), d.at(k)):
            return False
    return True


def _close(a, b) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))


def random_qfunction(rng: random.Random, q, T: int, scale: float = 1.0) -> QFunction:
    """Random function whose jumps are random multiples of the chain edges.

    This keeps ``L_grad`` at most ``scale`` (and of that order) so the
    Lipschitz and truncation bounds are exercised near their worst case.
    Values are accumulated upward from the tail so the tiny jumps deep in
    the chain survive floating point; exact mode adds a rational constant.
    """
    exact = isinstance(q, Fraction)
    vals = [_num(q, 0)]
    for m in range(T, -1, -1):
        u = rng.uniform(-1.0, 1.0) * scale
        if exact:
            # rational jump below e_m, since q^m (1 - q) (1 + q) q <= e_m
            u = Fraction(u).limit_denominator(1000) * min(1, (1 + q) * q)
            step = u * q ** m * (1 - q)
        else:
            step = u * math.sqrt(_edge_sq(q, m))
        vals.append(vals[-1] + step)
    vals.reverse()
    if exact:
        shift = Fraction(rng.randint(-9, 9), 10)
        vals = [v + shift for v in vals]
    return QFunction(q, tuple(vals[:T + 1]), vals[T + 1])


def _edge_sq(q, m):
    x = q ** (2 * m)
    return (x * (1 - q * q)) ** 2 / g_func(q, x)
