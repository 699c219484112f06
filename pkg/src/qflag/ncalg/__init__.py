"""Noncommutative algebra of O(SU_q(N)) with exact normal forms."""
from ..scalar import ZERO, ScalarQ, as_scalar
from .algebra import BoundExceeded, NCPoly, SUq, algebra
from .haar import (LaurentW, as_polynomial_in, cond_expectation, haar_n2, haar_phi,
                   modular_theta, phi_project, transpose_n2)
from .hopf import Tensor, antipode, cofactor, coproduct, counit, quantum_minor, sphere_element, star
from .printing import format_poly, poly_from_json, poly_to_json
from .rewriting import STRATEGIES, CompletionFailure, RewriteSystem, complete_rules


def reduce(p, N: int | None = None, bound: int | None = None):
    """Normal form of ``p``.

    ``p`` is an :class:`NCPoly` (already reduced, copied) or a raw mapping
    ``{word: coefficient}`` with words given as tuples of ``(i, j)`` pairs or
    letter codes; raw input needs ``N``.  ``bound`` caps the degree.
    """
    if isinstance(p, NCPoly):
        if bound is not None and p.degree() > bound:
            raise BoundExceeded(f"degree {p.degree()} exceeds bound {bound}")
        return NCPoly(p.alg, dict(p.terms))
    if N is None:
        raise TypeError("raw input needs the rank N")
    alg = algebra(N)
    raw = {}
    for w, c in dict(p).items():
        word = tuple(alg.letter(*x) if isinstance(x, tuple) else int(x) for x in w)
        if bound is not None and len(word) > bound:
            raise BoundExceeded(f"word of degree {len(word)} exceeds bound {bound}")
        c = as_scalar(c)
        raw[word] = raw.get(word, ZERO) + c
    return NCPoly(alg, alg.reduce_terms(raw))


def scalar_arith(a, b, op: str) -> ScalarQ:
    """``a op b`` for op in ``+ - * /`` on elements of Q(q^(1/2))."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "BoundExceeded", "CompletionFailure", "LaurentW", "NCPoly", "RewriteSystem", "STRATEGIES",
    "SUq", "Tensor", "algebra", "antipode", "as_polynomial_in", "cofactor", "complete_rules",
    "cond_expectation", "coproduct", "counit", "format_poly", "haar_n2", "haar_phi",
    "modular_theta", "phi_project", "poly_from_json", "poly_to_json", "quantum_minor",
    "reduce", "scalar_arith", "sphere_element", "star", "transpose_n2",
]
