"""Twisted forms, the Dolbeault-Dirac pieces and the gradient operators.

A form is a finite sum of ``x (x) e_I`` with ``x`` in O(SU_q(N)) and ``e_I`` a
basis vector of the exterior algebra on ``ell = N - 1`` generators.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ncalg.algebra import NCPoly, _acc, algebra
from .ncalg.haar import haar_n2
from .ncalg.hopf import sphere_element, star
from .scalar import ONE, ZERO, ScalarQ, as_scalar
from .uqact import (E, ExtVector, F, K, Kinv, UqElement, act_d, eps_q, eps_q_dag,
                    f_chain, m_element, n_element, sigma)


class FormElement:
    __slots__ = ("N", "M", "comps")

    def __init__(self, N: int, M: int, comps: dict | None = None):
        self.N = N
        self.M = M
        self.comps = {}
        for I, x in (comps or {}).items():
            if not x.is_zero():
                self.comps[tuple(sorted(I))] = x

    @property
    def ell(self) -> int:
        return self.N - 1

    @classmethod
    def simple(cls, x: NCPoly, I=(), M: int = 0) -> "FormElement":
        return cls(x.alg.N, M, {tuple(I): x})

    def _like(self, comps):
        return FormElement(self.N, self.M, comps)

    def __add__(self, other):
        out = dict(self.comps)
        for I, x in other.comps.items():
            out[I] = out[I] + x if I in out else x
        return self._like(out)

    def __neg__(self):
        return self._like({I: -x for I, x in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return self._like({I: x * c for I, x in self.comps.items()})

    __rmul__ = __mul__

    def left_mul(self, x: NCPoly) -> "FormElement":
        return self._like({I: x * y for I, y in self.comps.items()})

    def is_zero(self) -> bool:
        return not self.comps

    def __eq__(self, other):
        return isinstance(other, FormElement) and self.N == other.N and self.comps == other.comps

    def degrees(self) -> set:
        return {len(I) for I in self.comps}

    def __repr__(self):
        inner = ", ".join(f"e{list(I)}: {x}" for I, x in sorted(self.comps.items()))
        return f"FormElement(M={self.M}; {inner})"


def apply_tensor(form: FormElement, eta: UqElement | None, ext_op) -> FormElement:
    """``(d_eta (x) ext_op)`` applied to a form; ``eta=None`` means identity."""
    out: dict = {}
    for I, x in form.comps.items():
        y = x if eta is None else act_d(eta, x)
        if y.is_zero():
            continue
        vec = ext_op(ExtVector.basis(form.ell, I))
        for J, c in vec.terms.items():
            term = y * c
            out[J] = out[J] + term if J in out else term
    return form._like(out)


def _dbar_parts(N: int):
    key = N
    hit = _PARTS.get(key)
    if hit is None:
        ell = N - 1
        hit = []
        for i in range(1, ell + 1):
            hit.append((i, n_element(i, N) * m_element(i, N).star(),
                        m_element(i, N) * n_element(i, N)))
        _PARTS[key] = hit
    return hit


_PARTS: dict = {}


def dbar(form: FormElement) -> FormElement:
    out = form._like({})
    for i, lower, _ in _dbar_parts(form.N):
        out = out + apply_tensor(form, lower, lambda v, i=i: eps_q(i, v))
    return out


def dbar_dag(form: FormElement) -> FormElement:
    out = form._like({})
    for i, _, upper in _dbar_parts(form.N):
        out = out + apply_tensor(form, upper, lambda v, i=i: eps_q_dag(i, v))
    return out


def dirac(form: FormElement) -> FormElement:
    return dbar(form) + dbar_dag(form)


def gamma_member(form: FormElement, M: int | None = None) -> bool:
    """Right weight condition for the line bundle of charge ``M``."""
    M = form.M if M is None else M
    ell = form.ell
    k = K(form.N, ell)
    for I, x in form.comps.items():
        e = M - len(I) - (ell in I)
        if act_d(k, x) != x * ScalarQ.s_pow(e):
            return False
    return True


def omega_member(form: FormElement, M: int | None = None) -> bool:
    """Gamma condition plus invariance under the Levi part ``U_q(su(ell))``."""
    if not gamma_member(form, M):
        return False
    N, ell = form.N, form.ell
    for r in range(1, ell):
        kr, kir = K(N, r), Kinv(N, r)
        if apply_tensor(form, kr, lambda v: sigma(kr, v)) != form:
            return False
        for x in (E(N, r), F(N, r)):
            lhs = apply_tensor(form, x, lambda v: sigma(kr, v)) + \
                apply_tensor(form, kir, lambda v, x=x: sigma(x, v))
            if not lhs.is_zero():
                return False
    return True


def commutator_dbar(x: NCPoly, form: FormElement) -> FormElement:
    """``dbar(x form) - x dbar(form)``."""
    return dbar(form.left_mul(x)) - dbar(form).left_mul(x)


def commutator_formula(x: NCPoly, form: FormElement) -> FormElement:
    """Closed form of the commutator for ``x`` in the projective space."""
    N, ell = form.N, form.ell
    mq = ScalarQ.q_pow(1) * -1
    out = form._like({})
    for i in range(1, ell + 1):
        dx = act_d(f_chain(i, N), x) * (ScalarQ.q_pow(-1) * mq ** (i - ell))
        if dx.is_zero():
            continue
        out = out + apply_tensor(form.left_mul(dx), None, lambda v, i=i: eps_q(i, v))
    return out


def inner(a: FormElement, b: FormElement) -> ScalarQ:
    """``<x e_I, y e_J> = [I == J] h(x* y)`` at rank 2."""
    if a.N != 2:
        raise ValueError("inner product needs the closed-form Haar state (N = 2)")
    out = ZERO
    for I, x in a.comps.items():
        if I in b.comps:
            out = out + haar_n2(star(x) * b.comps[I])
    return out


def nabla_i(i: int, x: NCPoly) -> NCPoly:
    N = x.alg.N
    if not 1 <= i <= N - 1:
        raise IndexError(i)
    return act_d(f_chain(i, N), x) * (ScalarQ.q_pow(1) * -1) ** (i - N)


def nabla(*args):
    """``nabla(i, x)`` is one component; ``nabla(x)`` the form ``sum_i nabla_i(x) e_i``."""
    if len(args) == 2:
        return nabla_i(*args)
    (x,) = args
    N = x.alg.N
    comps = {(i,): nabla_i(i, x) for i in range(1, N)}
    return FormElement(N, 0, {I: c for I, c in comps.items() if not c.is_zero()})


dbar_dagger = dbar_dag


# ---- corpora -------------------------------------------------------------------

CORPUS_VERSION = 1


def sphere_monomials(N: int, max_degree: int):
    """Ordered monomials ``z^a (z*)^b`` with total degree at most ``max_degree``."""
    alg = algebra(N)
    gens = [("z", i) for i in range(1, N + 1)] + [("zs", i) for i in range(1, N + 1)]
    for d in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(len(gens)), d):
            x = alg.one()
            for k in combo:
                x = x * sphere_element(alg, *gens[k])
            na = sum(1 for k in combo if k < N)
            yield combo, d - 2 * na, x


def form_corpus(N: int, M: int, max_degree: int):
    """Versioned corpus: sphere monomials times ``e_I`` that satisfy the gamma condition.

    The charge of ``z`` is ``-1`` and of ``z*`` is ``+1``; the gamma condition
    fixes the total charge to ``M - |I| - [ell in I]``.
    """
    ell = N - 1
    out = []
    subsets = [I for k in range(ell + 1) for I in itertools.combinations(range(1, ell + 1), k)]
    mons = list(sphere_monomials(N, max_degree))
    for I in subsets:
        need = M - len(I) - (ell in I)
        for combo, charge, x in mons:
            if charge == need and not x.is_zero():
                out.append(FormElement(N, M, {I: x}))
    return out


# ---- gradient identities ------------------------------------------------------

@dataclass
class Check:
    check_id: str
    paper_ref: str
    status: str
    witness: dict = field(default_factory=dict)

    def as_dict(self):
        return {"check_id": self.check_id, "paper_ref": self.paper_ref,
                "status": self.status, "witness": self.witness}


def _check(cid, ref, lhs, rhs, **ctx) -> Check:
    ok = lhs == rhs
    wit = dict(ctx)
    if not ok:
        wit.update(lhs=str(lhs), rhs=str(rhs))
    return Check(cid, ref, "pass" if ok else "fail", wit)


def verify_gradient_suite(N: int) -> list[Check]:
    alg = algebra(N)
    ell = N - 1
    q2 = ScalarQ.q_pow(2)
    mq = ScalarQ.q_pow(1) * -1
    z = {i: sphere_element(alg, "z", i) for i in range(1, N + 1)}
    zs = {i: sphere_element(alg, "zs", i) for i in range(1, N + 1)}
    x = {i: sphere_element(alg, "x", i) for i in range(1, N + 1)}
    y = {i: sphere_element(alg, "y", i) for i in range(1, N + 1)}
    checks = []
    for i in range(1, ell + 1):
        for r in range(1, N + 1):
            checks.append(_check("nabla-kills-z", "gradient annihilates holomorphic generators",
                                 nabla(i, z[r]), alg.zero(), i=i, r=r))
            checks.append(_check("nabla-zstar", "gradient of antiholomorphic generators",
                                 nabla(i, zs[r]), star(alg.u(i, r)) * mq ** (i - N), i=i, r=r))
        checks.append(_check("nabla-y-closed-form", "gradient of the top radial element",
                             nabla(i, y[ell]),
                             star(alg.u(i, N)) * z[N] * (ScalarQ.s_pow(-3) * -1 * mq ** (i - N)), i=i))
        for r in range(1, N + 1):
            g = nabla(i, zs[r])
            for s_ in range(1, N + 1):
                if s_ != r:
                    checks.append(_check("z-commutes-nabla", "holomorphic generators commute with gradients",
                                         z[s_] * g, g * z[s_], i=i, r=r, s=s_))
                elif i == 1:
                    checks.append(Check("z-commutes-nabla", "holomorphic generators commute with gradients",
                                        "skipped", {"reason": "hypothesis s != r", "r": r, "s": s_}))
                if s_ < r:
                    checks.append(_check("zstar-commutes-nabla", "lower adjoint generators commute with gradients",
                                         zs[s_] * g, g * zs[s_], i=i, r=r, s=s_))
                    gx = nabla(i, x[r])
                    checks.append(_check("x-q2-nabla-x", "q^2 commutation of x with gradients of x",
                                         x[s_] * gx, gx * x[s_] * q2, i=i, r=r, s=s_))
        for r in range(1, ell + 1):
            gy = nabla(i, y[r])
            for s_ in range(1, r + 1):
                checks.append(_check("x-q2-nabla-y", "q^2 commutation of x with gradients of y",
                                     x[s_] * gy, gy * x[s_] * q2, i=i, r=r, s=s_))
                checks.append(_check("y-q2-nabla-y", "q^2 commutation of y with gradients of y",
                                     y[s_] * gy, gy * y[s_] * q2, i=i, r=r, s=s_))
    total = alg.zero()
    for i in range(1, ell + 1):
        g = nabla(i, y[ell])
        total = total + star(g) * g
    yl = y[ell]
    checks.append(_check("gradient-square", "sum of squared gradients of the radial element",
                         total, yl * (1 - yl * q2) * ScalarQ.q_pow(-1), N=N))
    for n in range(2, 4):
        for i in range(1, ell + 1):
            lhs = nabla(i, yl ** n)
            rhs = nabla(i, yl) * yl ** (n - 1) * ((1 - q2 ** n) / (1 - q2))
            checks.append(_check("nabla-power", "gradient of powers of the radial element",
                                 lhs, rhs, i=i, n=n))
    return checks
