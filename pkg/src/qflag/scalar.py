"""Exact scalars for the quantum group computations.

A scalar is a rational function in ``s`` with rational coefficients, where
``s`` is the square root of the deformation parameter, ``q = s**2``.  Half
powers of ``q`` (which show up in the Cartan part of the quantized enveloping
algebra) are therefore plain integer powers of ``s``.

Storage is ``num / den`` with ``num`` a Laurent polynomial and ``den`` an
ordinary monic polynomial with nonzero constant term, coprime to ``num``.
Laurent polynomials (``den == 1``) take a fast path that never calls gcd.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

_ONE_DEN = ((0, 1),)


def _c(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _pack(d: dict) -> tuple:
    return tuple(sorted((e, _c(c)) for e, c in d.items() if c != 0))


def _padd(a: tuple, b: tuple, sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b:
        out[e] = out.get(e, 0) + sign * c
    return out


def _pmul(a: tuple, b: tuple) -> dict:
    out: dict = {}
    for e1, c1 in a:
        for e2, c2 in b:
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return out


# dense helpers for the (rare) gcd path; index = exponent, lists over Fraction

def _dense(p: tuple) -> list:
    lo = p[0][0]
    out = [Fraction(0)] * (p[-1][0] - lo + 1)
    for e, c in p:
        out[e - lo] = Fraction(c)
    return out


def _sparse(d: list, shift: int = 0) -> tuple:
    return tuple((i + shift, _c(c)) for i, c in enumerate(d) if c != 0)


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: list, b: list):
    a = a[:]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        k = len(a) - len(b)
        f = a[-1] / lead
        quot[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        a.pop()
    return _trim(quot), a


def _gcd(a: list, b: list) -> list:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def _lowest(p: tuple) -> int:
    return p[0][0]


class ScalarQ:
    """Element of Q(s).  Immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, ScalarQ):
            if den is None:
                self.num, self.den = num.num, num.den
                return
            other = num / ScalarQ(den)
            self.num, self.den = other.num, other.den
            return
        if isinstance(num, (int, Rational)):
            num = _pack({0: Fraction(num)}) if num else ()
        elif isinstance(num, dict):
            num = _pack(num)
        else:
            num = _pack(dict(num))
        if den is None:
            self.num, self.den = num, _ONE_DEN
            return
        if isinstance(den, (int, Rational)):
            den = _pack({0: Fraction(den)})
        elif isinstance(den, dict):
            den = _pack(den)
        else:
            den = _pack(dict(den))
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: tuple, den: tuple = _ONE_DEN) -> "ScalarQ":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def s_pow(cls, k: int, coeff=1) -> "ScalarQ":
        return cls._raw(((k, _c(Fraction(coeff))),))

    @classmethod
    def q_pow(cls, k, coeff=1) -> "ScalarQ":
        """``coeff * q**k``; ``k`` may be a half integer."""
        e = Fraction(k) * 2
        if e.denominator != 1:
            raise ValueError(f"q-exponent {k} is not a half integer")
        return cls.s_pow(int(e), coeff)

    # ---- arithmetic -------------------------------------------------------

    @staticmethod
    def coerce(x) -> "ScalarQ":
        if isinstance(x, ScalarQ):
            return x
        if isinstance(x, (int, Rational)):
            return ScalarQ._raw(((0, _c(Fraction(x))),)) if x else ZERO
        return NotImplemented

    def __add__(self, other):
        other = ScalarQ.coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == _ONE_DEN:
                return ScalarQ._raw(_pack(_padd(self.num, other.num)))
            return ScalarQ._raw(*_normalize(_pack(_padd(self.num, other.num)), self.den))
        num = _pack(_padd(_pack(_pmul(self.num, other.den)), _pack(_pmul(other.num, self.den))))
        return ScalarQ._raw(*_normalize(num, _pack(_pmul(self.den, other.den))))

    __radd__ = __add__

    def __neg__(self):
        return ScalarQ._raw(tuple((e, -c) for e, c in self.num), self.den)

    def __sub__(self, other):
        other = ScalarQ.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = ScalarQ.coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if other.den == _ONE_DEN and len(other.num) == 1 and other.num[0] == (0, 1):
            return self
        if self.den == _ONE_DEN and other.den == _ONE_DEN:
            return ScalarQ._raw(_pack(_pmul(self.num, other.num)))
        num = _pack(_pmul(self.num, other.num))
        return ScalarQ._raw(*_normalize(num, _pack(_pmul(self.den, other.den))))

    __rmul__ = __mul__

    def inverse(self) -> "ScalarQ":
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        return ScalarQ._raw(*_normalize(self.den, self.num))

    def __truediv__(self, other):
        other = ScalarQ.coerce(other)
        if other is NotImplemented:
            return other
        if other.den == _ONE_DEN and len(other.num) == 1:
            # monomial divisor: no gcd needed
            e, c = other.num[0]
            return self * ScalarQ._raw(((-e, _c(Fraction(1) / c)),))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ScalarQ.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = ScalarQ.coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self.den == _ONE_DEN and self.num == ((0, 1),)

    def is_laurent(self) -> bool:
        return self.den == _ONE_DEN

    def is_monomial(self) -> bool:
        return self.den == _ONE_DEN and len(self.num) == 1

    # ---- evaluation ---------------------------------------------------------

    def evaluate(self, s0):
        """Value at ``s = s0`` (exact for Fraction input)."""
        def ev(p):
            return sum(c * s0 ** e for e, c in p)
        d = ev(self.den)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at s={s0}")
        n = ev(self.num)
        if isinstance(s0, (int, Fraction)):
            return Fraction(n) / Fraction(d)
        return n / d

    def at_q(self, q0):
        """Value at ``q = q0``.  Exact when only even powers of ``s`` occur."""
        if all(e % 2 == 0 for e, _ in self.num + self.den) and isinstance(q0, (int, Fraction)):
            half = ScalarQ._raw(tuple((e // 2, c) for e, c in self.num),
                                tuple((e // 2, c) for e, c in self.den))
            return half.evaluate(Fraction(q0))
        return self.evaluate(float(q0) ** 0.5)

    # ---- printing -----------------------------------------------------------

    def _poly_str(self, p: tuple) -> str:
        even = all(e % 2 == 0 for e, _ in self.num + self.den)
        var, div = ("q", 2) if even else ("s", 1)
        parts = []
        for e, c in sorted(p, key=lambda t: t[0]):
            k = e // div
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        if not self.num:
            return "0"
        n = self._poly_str(self.num)
        if self.den == _ONE_DEN:
            return n
        if len(self.num) > 1:
            n = f"({n})"
        return f"{n}/({self._poly_str(self.den)})"

    def __repr__(self):
        return f"ScalarQ({self})"

    def to_sparse_s(self) -> tuple[str, str]:
        """Numerator and denominator as ``c*s^k`` sums with ``k >= 0``."""
        num, den = self.num, self.den
        if num and num[0][0] < 0:
            k = -num[0][0]
            num = tuple((e + k, c) for e, c in num)
            den = tuple((e + k, c) for e, c in den)

        def fmt(p):
            if not p:
                return "0"
            return " + ".join(f"{c}*s^{e}" for e, c in p)
        return fmt(num), fmt(den)

    @classmethod
    def from_sparse_s(cls, num: str, den: str = "1*s^0") -> "ScalarQ":
        def parse(text):
            out: dict = {}
            if text.strip() == "0":
                return out
            for part in text.split(" + "):
                c, e = part.split("*s^")
                out[int(e)] = out.get(int(e), 0) + Fraction(c)
            return out
        return cls(parse(num), parse(den))


def _normalize(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), _ONE_DEN
    shift = _lowest(num) - _lowest(den)
    n0 = _dense(num)
    d0 = _dense(den)
    if len(d0) > 1:
        g = _gcd(n0, d0)
        if len(g) > 1:
            n0, _ = _divmod(n0, g)
            d0, _ = _divmod(d0, g)
    lead = d0[-1]
    n = _sparse([c / lead for c in n0], shift)
    d = _sparse([c / lead for c in d0])
    return n, d


ZERO = ScalarQ._raw(())
ONE = ScalarQ._raw(((0, 1),))
S = ScalarQ.s_pow(1)
Q = ScalarQ.s_pow(2)
QINV = ScalarQ.s_pow(-2)


def qpow(k) -> ScalarQ:
    return ScalarQ.q_pow(k)


def as_scalar(x) -> ScalarQ:
    out = ScalarQ.coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return out
