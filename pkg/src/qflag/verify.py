"""Identity suites shared by the CLI and the test-suite.

Every suite returns a list of :class:`~qflag.dirac.Check` records.  Corpora
are deterministic so that reports are reproducible.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .dirac import (Check, FormElement, commutator_dbar, commutator_formula, dbar, dbar_dag,
                    form_corpus, gamma_member, inner, omega_member, verify_gradient_suite)
from .ncalg import (algebra, antipode, as_polynomial_in, cond_expectation, coproduct, counit,
                    haar_n2, modular_theta, sphere_element, star, transpose_n2)
from .ncalg.hopf import Tensor
from .scalar import ONE, ScalarQ
from .uqact import (E, ExtVector, F, K, Kinv, UqElement, act_d, act_d_pairing, act_del,
                    eps_q, sigma, uq_counit, verify_rmatrix)

SUITES = ("hopf", "unitarity", "sphere", "action", "rmatrix", "forms", "gradient",
          "transpose", "haar")


def _chk(cid, ref, ok, **wit) -> Check:
    return Check(cid, ref, "pass" if ok else "fail", wit)


def _eq(cid, ref, lhs, rhs, **wit) -> Check:
    ok = lhs == rhs
    if not ok:
        wit = dict(wit, lhs=str(lhs), rhs=str(rhs))
    return Check(cid, ref, "pass" if ok else "fail", wit)


def _skip(cid, ref, why) -> Check:
    return Check(cid, ref, "skipped", {"reason": why})


def word_corpus(N: int, max_degree: int | None = None):
    """Normal forms of all generator words up to ``max_degree``."""
    alg = algebra(N)
    if max_degree is None:
        max_degree = 3 if N == 2 else 2
    out = []
    for d in range(max_degree + 1):
        for w in itertools.product(range(N * N), repeat=d):
            out.append((w, alg.reduce({w: 1})))
    return out


def _word_label(alg, w):
    return "*".join("u[%d,%d]" % alg.indices(x) for x in w) or "1"


def generator_elements(N: int) -> list:
    return [UqElement.gen(N, k, r) for r in range(1, N) for k in ("E", "F", "K", "Ki")]


# ---- suites ----------------------------------------------------------------

def suite_hopf(N: int) -> list[Check]:
    alg = algebra(N)
    ref = "Hopf *-algebra axioms of O(SU_q(N))"
    out = []
    for w, x in word_corpus(N):
        lab = _word_label(alg, w)
        d = coproduct(x)
        left = d.map_leg(0, coproduct)
        right = d.map_leg(1, coproduct)
        out.append(_chk("coassociativity", ref, left == right, x=lab))
        out.append(_eq("counit-left", ref, d.slice(0, counit), x, x=lab))
        out.append(_eq("counit-right", ref, d.slice(1, counit), x, x=lab))
        eps = counit(x)
        out.append(_eq("antipode-left", ref, d.map_leg(0, antipode).multiply(), alg.scalar(eps), x=lab))
        out.append(_eq("antipode-right", ref, d.map_leg(1, antipode).multiply(), alg.scalar(eps), x=lab))
        out.append(_eq("star-involution", ref, star(star(x)), x, x=lab))
        out.append(_eq("antipode-star", ref, antipode(star(antipode(star(x)))), x, x=lab))
        sx = star(x)
        dstar = Tensor(alg, {})
        for (a, b), c in d.terms.items():
            pa, pb = star(alg.poly({a: ONE})), star(alg.poly({b: ONE}))
            for wa, ca in pa.terms.items():
                for wb, cb in pb.terms.items():
                    dstar = dstar + Tensor(alg, {(wa, wb): c * ca * cb})
        out.append(_chk("coproduct-star", ref, coproduct(sx) == dstar, x=lab))
    return out


def suite_unitarity(N: int) -> list[Check]:
    alg = algebra(N)
    u = alg.u
    q2 = ScalarQ.q_pow(2)
    ref = "unitarity of the fundamental corepresentation and of its contragredient"
    out = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            delta = alg.scalar(int(i == j))
            s1 = sum((star(u(k, i)) * u(k, j) for k in range(1, N + 1)), alg.zero())
            s2 = sum((u(i, k) * star(u(j, k)) for k in range(1, N + 1)), alg.zero())
            s3 = sum((u(k, i) * star(u(k, j)) * q2 ** (k - j) for k in range(1, N + 1)), alg.zero())
            s4 = sum((star(u(i, k)) * u(j, k) * q2 ** (i - k) for k in range(1, N + 1)), alg.zero())
            for cid, s in (("u*u", s1), ("uu*", s2), ("twisted-uu*", s3), ("twisted-u*u", s4)):
                out.append(_eq(cid, ref, s, delta, i=i, j=j))
    return out


def suite_sphere(N: int) -> list[Check]:
    alg = algebra(N)
    q = ScalarQ.q_pow(1)
    q2 = ScalarQ.q_pow(2)
    ref = "relations of the odd quantum sphere"
    z = {i: sphere_element(alg, "z", i) for i in range(1, N + 1)}
    zs = {i: sphere_element(alg, "zs", i) for i in range(1, N + 1)}
    out = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i < j:
                out.append(_eq("zz", ref, z[i] * z[j], z[j] * z[i] * q, i=i, j=j))
            if i != j:
                out.append(_eq("z*z", ref, zs[i] * z[j], z[j] * zs[i] * q, i=i, j=j))
        lower = sum((z[j] * zs[j] for j in range(1, i)), alg.zero())
        out.append(_eq("[z*,z]", ref, zs[i] * z[i] - z[i] * zs[i], lower * (1 - q2), i=i))
    out.append(_eq("sum-zz*", ref, sum((z[i] * zs[i] for i in range(1, N + 1)), alg.zero()), alg.one()))
    ell = N - 1
    y = sphere_element(alg, "y", ell)
    out.append(_eq("y-from-zN", ref, y, (1 - zs[N] * z[N]) * ScalarQ.q_pow(-2)))
    out.append(_eq("zNzN*", ref, z[N] * zs[N], 1 - y))
    out.append(_eq("zN*zN", ref, zs[N] * z[N], 1 - y * q2))
    out.append(_eq("y-commutes-zN", ref, y * z[N], z[N] * y * q2))
    for k in range(1, 4):
        lhs = zs[N] ** k * z[N] ** k
        rhs = alg.one()
        for j in range(1, k + 1):
            rhs = rhs * (1 - y * q2 ** j)
        out.append(_eq("a_k-product", ref, lhs, rhs, k=k))
    return out


def suite_action(N: int) -> list[Check]:
    alg = algebra(N)
    ref = "left action of U_q(su(N)) by twisted derivations"
    q = ScalarQ.q_pow(1)
    qi = ScalarQ.q_pow(-1)
    out = []
    corpus = word_corpus(N)
    gens = generator_elements(N)
    for g in gens:
        gl = next(iter(g.terms))[0]
        bad = [lab for lab in (_word_label(alg, w) for w, x in corpus
                               if act_d(g, x) != act_d_pairing(g, x))]
        out.append(_chk("coproduct-pairing-oracle", ref, not bad, generator=f"{gl[0]}[{gl[1]}]",
                        failures=bad[:5]))
    small = corpus[: min(len(corpus), 40)]
    for g1, g2 in itertools.product(gens, repeat=2):
        l1, l2 = next(iter(g1.terms))[0], next(iter(g2.terms))[0]
        bad = [_word_label(alg, w) for w, x in small
               if act_d_pairing(g1 * g2, x) != act_d(g1, act_d(g2, x))]
        out.append(_chk("word-composition", ref, not bad, eta=f"{l1[0]}[{l1[1]}]",
                        xi=f"{l2[0]}[{l2[1]}]", failures=bad[:5]))
    for r in range(1, N):
        e, f, k, ki = E(N, r), F(N, r), K(N, r), Kinv(N, r)
        for (w1, x), (w2, y) in itertools.product(small[:12], repeat=2):
            xy = x * y
            for name, d in (("E", e), ("F", f)):
                lhs = act_d(d, xy)
                rhs = act_d(d, x) * act_d(ki, y) + act_d(k, x) * act_d(d, y)
                out.append(_eq("twisted-leibniz", ref, lhs, rhs, gen=f"{name}[{r}]",
                               x=_word_label(alg, w1), y=_word_label(alg, w2)))
        for w, x in small:
            lab = _word_label(alg, w)
            out.append(_eq("star-E", ref, act_d(e, star(x)), star(act_d(f, x)) * -qi, r=r, x=lab))
            out.append(_eq("star-F", ref, act_d(f, star(x)), star(act_d(e, x)) * -q, r=r, x=lab))
            out.append(_eq("star-K", ref, act_d(k, star(x)), star(act_d(ki, x)), r=r, x=lab))
            out.append(_eq("K-Kinv", ref, act_d(k * ki, x), x, r=r, x=lab))
    # defining relations of U_q(su(N)) as operators
    for w, x in small:
        lab = _word_label(alg, w)
        for i in range(1, N):
            for j in range(1, N):
                ki, ej, fj = K(N, i), E(N, j), F(N, j)
                a = 1 if i == j else (Fraction(-1, 2) if abs(i - j) == 1 else 0)
                sc = ScalarQ.q_pow(a)
                out.append(_eq("KE", ref, act_d(ki * ej, x), act_d(ej * ki, x) * sc, i=i, j=j, x=lab))
                out.append(_eq("KF", ref, act_d(ki * fj, x), act_d(fj * ki, x) * sc.inverse(), i=i, j=j, x=lab))
                comm = act_d(E(N, i) * fj - fj * E(N, i), x)
                if i == j:
                    want = (act_d(ki * ki, x) - act_d(Kinv(N, i) * Kinv(N, i), x)) / (q - qi)
                else:
                    want = alg.zero()
                out.append(_eq("[E,F]", ref, comm, want, i=i, j=j, x=lab))
                if abs(i - j) == 1:
                    for name, gi, gj in (("E", E(N, i), ej), ("F", F(N, i), fj)):
                        serre = gi * gi * gj - gi * gj * gi * (q + qi) + gj * gi * gi
                        out.append(_eq("serre", ref, act_d(serre, x), alg.zero(), gen=name, i=i, j=j, x=lab))
                elif i != j:
                    out.append(_eq("[E,E]", ref, act_d(E(N, i) * ej - ej * E(N, i), x), alg.zero(), i=i, j=j, x=lab))
    # Haar compatibility
    if N == 2:
        for g in gens:
            for w, x in corpus:
                out.append(_eq("haar-invariance", ref, haar_n2(act_d(g, x)), uq_counit(g) * haar_n2(x),
                               x=_word_label(alg, w)))
    else:
        out.append(_skip("haar-invariance", ref, "closed-form Haar state only at N = 2"))
    # projective space is fixed by U_q(su(ell)) and by K_ell
    ell = N - 1
    z = [sphere_element(alg, "z", i) for i in range(1, N + 1)]
    zs = [sphere_element(alg, "zs", i) for i in range(1, N + 1)]
    for i in range(N):
        for j in range(N):
            p = z[i] * zs[j]
            for r in range(1, ell):
                for g in (E(N, r), F(N, r), K(N, r)):
                    out.append(_eq("projective-invariance", ref, act_d(g, p), p * uq_counit(g), i=i + 1, j=j + 1, r=r))
            out.append(_eq("projective-K_ell", ref, act_d(K(N, ell), p), p, i=i + 1, j=j + 1))
    return out


def suite_rmatrix(N: int) -> list[Check]:
    ref = "braided R-matrix intertwines the two-fold tensor product"
    return [_chk("rmatrix-commutes", ref, verify_rmatrix(r, N), r=r) for r in range(1, N)]


def suite_forms(N: int, max_degree: int | None = None) -> list[Check]:
    alg = algebra(N)
    ell = N - 1
    ref = "twisted Dolbeault complex on quantum projective space"
    if max_degree is None:
        max_degree = 4 if N <= 3 else 2
    out = []
    # equivariance of twisted exterior multiplication
    for r in range(1, ell):
        for j in range(1, ell + 1):
            v = ExtVector.basis(ell, (j,))
            for k in range(ell + 1):
                for I in itertools.combinations(range(1, ell + 1), k):
                    e_I = ExtVector.basis(ell, I)
                    kr, kir = K(N, r), Kinv(N, r)
                    for x in (E(N, r), F(N, r)):
                        lhs = sigma(x, eps_q(j, e_I))
                        a = sigma(x, v)
                        b = sigma(kir, v)
                        rhs = ExtVector(ell)
                        for J, c in a.terms.items():
                            rhs = rhs + eps_q(J[0], sigma(kr, e_I)) * c
                        for J, c in b.terms.items():
                            rhs = rhs + eps_q(J[0], sigma(x, e_I)) * c
                        out.append(_chk("exterior-equivariance", ref, lhs == rhs, r=r, j=j, I=list(I)))
    for j in range(1, N + 1):
        zf = FormElement(N, -1, {(): sphere_element(alg, "z", j)})
        zsf = FormElement(N, 1, {(): sphere_element(alg, "zs", j)})
        out.append(_chk("z-in-omega", ref, omega_member(zf), j=j))
        out.append(_chk("zstar-in-omega", ref, omega_member(zsf), j=j))
    out.append(_chk("gamma-rejects-wrong-charge", ref,
                    not gamma_member(FormElement(N, 0, {(): alg.u(1, 1)})) if N == 2 else True))
    xs = [sphere_element(alg, "z", 1) * sphere_element(alg, "zs", N),
          sphere_element(alg, "y", ell),
          sphere_element(alg, "z", N) * sphere_element(alg, "zs", 1)]
    for M in (-1, 0, 1):
        om = [f for f in form_corpus(N, M, max_degree) if omega_member(f)]
        extra = [dbar(f) for f in om if f.degrees() == {0}]
        extra += [dbar_dag(f) for f in om if f.degrees() == {ell}]
        om += [FormElement(N, M, f.comps) for f in extra if not f.is_zero()]
        for idx, f in enumerate(om):
            d, dd = dbar(f), dbar_dag(f)
            out.append(_chk("dbar-squared", ref, dbar(d).is_zero(), M=M, idx=idx))
            out.append(_chk("dbar-dag-squared", ref, dbar_dag(dd).is_zero(), M=M, idx=idx))
            out.append(_chk("dbar-preserves-omega", ref, omega_member(FormElement(N, M, d.comps)), M=M, idx=idx))
            out.append(_chk("dbar-dag-preserves-omega", ref, omega_member(FormElement(N, M, dd.comps)), M=M, idx=idx))
            deg = f.degrees()
            out.append(_chk("grading-odd", ref,
                            all(len(I) - 1 in deg for I in d.comps) and all(len(I) + 1 in deg for I in dd.comps),
                            M=M, idx=idx))
        for idx, f in enumerate(om[:25]):
            for xi, x in enumerate(xs):
                out.append(_eq("dbar-commutator", ref, commutator_dbar(x, f), commutator_formula(x, f),
                               M=M, idx=idx, x=xi))
        if N == 2:
            gam = form_corpus(N, M, max_degree)
            for a, b in itertools.product(gam[:20], repeat=2):
                out.append(_eq("dbar-adjoint", ref, inner(dbar(a), b), inner(a, dbar_dag(b)), M=M,
                               convention="inner product linear in the second argument"))
    if N != 2:
        out.append(_skip("dbar-adjoint", ref, "inner product needs the closed-form Haar state (N = 2)"))
    return out


def suite_gradient(N: int) -> list[Check]:
    return verify_gradient_suite(N)


def suite_transpose(N: int) -> list[Check]:
    ref = "transpose map intertwines left and right actions"
    if N != 2:
        return [_skip("transpose-intertwining", ref, "defined for N = 2 only")]
    alg = algebra(2)
    nu = {"K": (K(2, 1), Kinv(2, 1)), "Ki": (Kinv(2, 1), K(2, 1)),
          "E": (E(2, 1), F(2, 1) * -1), "F": (F(2, 1), E(2, 1) * -1)}
    out = []
    for name, (eta, image) in nu.items():
        for w, x in word_corpus(2, 3):
            lhs = act_d(eta, transpose_n2(x))
            rhs = transpose_n2(act_del(image, x))
            out.append(_eq("transpose-intertwining", ref, lhs, rhs, eta=name, x=_word_label(alg, w)))
    return out


def suite_haar(N: int) -> list[Check]:
    ref = "Haar state, modular automorphism and conditional expectation"
    out = []
    if N == 2:
        alg = algebra(2)
        q = ScalarQ.q_pow(1)
        out.append(_eq("haar-u12u21", ref, haar_n2(alg.u(1, 2) * alg.u(2, 1)), -q / (1 + q * q)))
        corpus = word_corpus(2, 4)
        for w, x in corpus:
            h = haar_n2(x)
            d = coproduct(x)
            out.append(_eq("haar-left-invariant", ref, d.slice(0, haar_n2), alg.scalar(h), x=_word_label(alg, w)))
            out.append(_eq("haar-right-invariant", ref, d.slice(1, haar_n2), alg.scalar(h), x=_word_label(alg, w)))
        for (w1, x), (w2, y) in itertools.product(corpus[:30], repeat=2):
            out.append(_eq("modular", ref, haar_n2(x * y), haar_n2(y * modular_theta(x)),
                           x=_word_label(alg, w1), y=_word_label(alg, w2)))
        for w, x in corpus:
            lab = _word_label(alg, w)
            t = transpose_n2(x)
            out.append(_eq("haar-transpose", ref, haar_n2(t), haar_n2(x), x=lab))
            out.append(_eq("transpose-involution", ref, transpose_n2(t), x, x=lab))
            out.append(_eq("transpose-star", ref, transpose_n2(star(x)), star(t), x=lab))
            for g in generator_elements(2):
                gl = next(iter(g.terms))[0]
                out.append(_eq("haar-action", ref, haar_n2(act_d(g, x)), uq_counit(g) * haar_n2(x),
                               generator=f"{gl[0]}[{gl[1]}]", x=lab))
        out.extend(suite_transpose(2))
        z1, zs1, zs2 = (sphere_element(alg, k, i) for k, i in (("z", 1), ("zs", 1), ("zs", 2)))
        out.append(_eq("E-unit", ref, cond_expectation(alg.one()), alg.one()))
        out.append(_eq("E-z1z1*", ref, cond_expectation(z1 * zs1), sphere_element(alg, "y", 1)))
        out.append(_eq("E-counit-z1z2*", ref, counit(cond_expectation(z1 * zs2)), ScalarQ(0)))
    else:
        out.append(_skip("haar-closed-form", ref, "closed-form Haar state only at N = 2"))
    if N > 3:
        out.append(_skip("conditional-expectation", ref, "needs the Haar state of SU_q(N-1)"))
        return out
    alg = algebra(N)
    ell = N - 1
    y = sphere_element(alg, "y", ell)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            x = sphere_element(alg, "z", i) * sphere_element(alg, "zs", j)
            ex = cond_expectation(x)
            out.append(_eq("E-counit", ref, counit(ex), counit(x), i=i, j=j))
            out.append(_chk("E-radial", ref, as_polynomial_in(ex, y, 2) is not None, i=i, j=j))
            out.append(_eq("E-idempotent", ref, cond_expectation(ex), ex, i=i, j=j))
    for k in range(3):
        p = y ** k
        out.append(_eq("E-fixes-radial", ref, cond_expectation(p), p, k=k))
    return out


SUITE_FUNCS = {
    "hopf": suite_hopf, "unitarity": suite_unitarity, "sphere": suite_sphere,
    "action": suite_action, "rmatrix": suite_rmatrix, "forms": suite_forms,
    "gradient": suite_gradient, "transpose": suite_transpose, "haar": suite_haar,
}


def run_suite(name: str, N: int) -> list[Check]:
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, N))
        return out
    if name not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}")
    checks = SUITE_FUNCS[name](N)
    for c in checks:
        c.witness.setdefault("suite", name)
    return checks


def report(name: str, N: int, checks: list[Check]) -> dict:
    counts = {s: sum(1 for c in checks if c.status == s) for s in ("pass", "fail", "skipped")}
    return {"suite": name, "N": N, "summary": counts, "checks": [c.as_dict() for c in checks]}
