"""Dense primal simplex for ``max c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0``.

The origin is feasible, so no phase one is needed.  Bland's rule prevents
cycling.  The exact variant keeps the tableau rational and only the right
hand side in whatever ordered group ``b`` lives in (for example edge-length
sums), which is enough because pivots only divide by tableau entries.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


class Unbounded(Exception):
    pass


def simplex_max_float(c, A, b, tol: float = 1e-12, max_iter: int = 100000) -> float:
    A = np.asarray(A, dtype=float)
    m, n = A.shape
    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = A
    tab[:m, n:n + m] = np.eye(m)
    tab[:m, -1] = b
    tab[m, :n] = -np.asarray(c, dtype=float)
    basis = list(range(n, n + m))
    for _ in range(max_iter):
        obj = tab[m, :-1]
        cand = np.nonzero(obj < -tol)[0]
        if cand.size == 0:
            return float(tab[m, -1])
        j = int(cand[0])
        col = tab[:m, j]
        pos = np.nonzero(col > tol)[0]
        if pos.size == 0:
            raise Unbounded("objective is unbounded")
        ratios = tab[pos, -1] / col[pos]
        best = ratios.min()
        ties = pos[ratios <= best + tol * max(1.0, abs(best))]
        i = int(min(ties, key=lambda r: basis[r]))
        tab[i] /= tab[i, j]
        factors = tab[:, j].copy()
        factors[i] = 0.0
        tab -= np.outer(factors, tab[i])
        basis[i] = j
    raise RuntimeError("simplex iteration limit reached")


def simplex_max_exact(c, A, b, zero, max_iter: int = 100000):
    m, n = len(A), len(A[0])
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]] + [Fraction(int(k == i)) for k in range(m)]
        rows.append(row)
    rhs = list(b)
    obj = [-Fraction(x) for x in c] + [Fraction(0)] * m
    val = zero
    basis = list(range(n, n + m))
    for _ in range(max_iter):
        j = next((k for k, v in enumerate(obj) if v < 0), None)
        if j is None:
            return val
        best, best_i = None, None
        for i in range(m):
            a = rows[i][j]
            if a > 0:
                r = rhs[i] / a
                if best is None:
                    best, best_i = r, i
                    continue
                s = (r - best).sign() if hasattr(r, "sign") else (r > best) - (r < best)
                if s < 0 or (s == 0 and basis[i] < basis[best_i]):
                    best, best_i = r, i
        if best_i is None:
            raise Unbounded("objective is unbounded")
        i = best_i
        piv = rows[i][j]
        rows[i] = [v / piv for v in rows[i]]
        rhs[i] = rhs[i] / piv
        pr, pb = rows[i], rhs[i]
        for k in range(m):
            if k != i:
                f = rows[k][j]
                if f:
                    rows[k] = [a - f * p for a, p in zip(rows[k], pr)]
                    rhs[k] = rhs[k] - pb * f
        f = obj[j]
        obj = [a - f * p for a, p in zip(obj, pr)]
        val = val - pb * f
        basis[i] = j
    raise RuntimeError("simplex iteration limit reached")
