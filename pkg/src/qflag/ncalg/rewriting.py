"""Word-level rewriting system for O(SU_q(N)), completed up to a degree bound.

This is an independent route to normal forms: the defining relations are
oriented with the same monomial order as :mod:`qflag.ncalg.algebra`, then
overlaps and inclusions between left-hand sides are resolved
(Knuth-Bendix / Buchberger style) for all overlap words of length at most the
bound.  Rewriting is done by plain pattern matching with a selectable redex
strategy, so agreement with the PBW engine is a genuine confluence check.
"""
from __future__ import annotations

import heapq
import itertools

from ..scalar import ONE, ScalarQ, as_scalar
from .algebra import BoundExceeded, NCPoly, SUq, _acc, algebra, inversions


class CompletionFailure(Exception):
    """The completion did not finish within its resource limits."""


STRATEGIES = ("left-outermost", "right-innermost")


class RewriteSystem:
    def __init__(self, N: int, degree_bound: int):
        self.N = N
        self.degree_bound = degree_bound
        self.alg: SUq = algebra(N)
        self.rules: dict[tuple, dict] = {}
        self._lengths: list[int] = []

    def key(self, w):
        return self.alg.order_key(w)

    def add_rule(self, lhs: tuple, rhs: dict):
        for w in rhs:
            if self.key(w) >= self.key(lhs):
                raise ValueError(f"rule {lhs} -> {w} is not decreasing")
        self.rules[lhs] = rhs
        self._lengths = sorted({len(l) for l in self.rules})

    # ---- rewriting ----------------------------------------------------------

    def _redex(self, w: tuple, strategy: str):
        n = len(w)
        if strategy == "left-outermost":
            for i in range(n):
                for L in reversed(self._lengths):
                    if i + L <= n and w[i:i + L] in self.rules:
                        return i, L
        elif strategy == "right-innermost":
            for i in range(n - 1, -1, -1):
                for L in self._lengths:
                    if i + L <= n and w[i:i + L] in self.rules:
                        return i, L
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        return None

    def rewrite_terms(self, raw: dict, strategy: str = "left-outermost") -> dict:
        for w in raw:
            if len(w) > self.degree_bound:
                raise BoundExceeded(f"degree {len(w)} exceeds completion bound {self.degree_bound}")
        work = {}
        for w, c in raw.items():
            _acc(work, tuple(w), as_scalar(c))
        heap = [(_neg_key(self.key(w)), w) for w in work]
        heapq.heapify(heap)
        done: dict = {}
        fifo = strategy == "right-innermost"
        queue = list(work) if fifo else None
        while (queue if fifo else heap):
            if fifo:
                w = queue.pop(0)
            else:
                _, w = heapq.heappop(heap)
            c = work.pop(w, None)
            if c is None:
                continue
            red = self._redex(w, strategy)
            if red is None:
                _acc(done, w, c)
                continue
            i, L = red
            pre, post = w[:i], w[i + L:]
            for r, rc in self.rules[w[i:i + L]].items():
                nw = pre + r + post
                fresh = nw not in work
                _acc(work, nw, c * rc)
                if fresh and nw in work:
                    if fifo:
                        queue.append(nw)
                    else:
                        heapq.heappush(heap, (_neg_key(self.key(nw)), nw))
        return done

    def rewrite(self, p, strategy: str = "left-outermost") -> NCPoly:
        raw = p.terms if isinstance(p, NCPoly) else p
        return NCPoly(self.alg, self.rewrite_terms(raw, strategy))

    def is_normal(self, w: tuple) -> bool:
        return self._redex(w, "left-outermost") is None

    # ---- completion ---------------------------------------------------------

    def _ambiguities(self, l1: tuple, l2: tuple):
        """Overlap and inclusion words of ``l1`` followed by ``l2``."""
        n1, n2 = len(l1), len(l2)
        for k in range(1, min(n1, n2)):
            if l1[n1 - k:] == l2[:k] and n1 + n2 - k <= self.degree_bound:
                yield l1 + l2[k:], 0, n1 - k
        if n2 < n1:
            for p in range(n1 - n2 + 1):
                if l1[p:p + n2] == l2:
                    yield l1, 0, p

    def _spoly(self, W: tuple, l1: tuple, p1: int, l2: tuple, p2: int) -> dict:
        raw: dict = {}
        for lhs, pos, sign in ((l1, p1, 1), (l2, p2, -1)):
            pre, post = W[:pos], W[pos + len(lhs):]
            for r, c in self.rules[lhs].items():
                _acc(raw, pre + r + post, c * sign)
        return self.rewrite_terms(raw)

    def complete(self, max_rules: int = 20000):
        pending = []
        seen = set()

        def push(a, b):
            for pair in ((a, b), (b, a)):
                if pair in seen:
                    continue
                seen.add(pair)
                for W, p1, p2 in self._ambiguities(*pair):
                    heapq.heappush(pending, (len(W), W, pair[0], p1, pair[1], p2))

        lhss = list(self.rules)
        for a, b in itertools.combinations_with_replacement(lhss, 2):
            push(a, b)
        while pending:
            _, W, l1, p1, l2, p2 = heapq.heappop(pending)
            if l1 not in self.rules or l2 not in self.rules:
                continue
            diff = self._spoly(W, l1, p1, l2, p2)
            if not diff:
                continue
            lead = max(diff, key=self.key)
            inv = ONE / diff[lead]
            rhs = {w: -c * inv for w, c in diff.items() if w != lead}
            self.add_rule(lead, rhs)
            if len(self.rules) > max_rules:
                raise CompletionFailure(f"more than {max_rules} rules below degree {self.degree_bound}")
            for other in list(self.rules):
                push(lead, other)
        return self


def _neg_key(k):
    # heapq is a min-heap; we want the largest word first
    return (-k[0], k[1], tuple(-x for x in k[2]))


def complete_rules(N: int, degree_bound: int = 8, max_rules: int = 20000) -> RewriteSystem:
    """Oriented defining relations plus every rule forced by overlaps up to ``degree_bound``."""
    if degree_bound < 2:
        raise ValueError("degree bound must be at least 2")
    sysm = RewriteSystem(N, degree_bound)
    alg = sysm.alg
    for (x, y), terms in alg._swap.items():
        sysm.add_rule((x, y), {w: c for c, w in terms})
    mq = ScalarQ.q_pow(1) * -1
    det: dict = {}
    for perm in itertools.permutations(range(N)):
        det[tuple(perm[k] * N + k for k in range(N))] = mq ** inversions(perm)
    _acc(det, (), -ONE)
    if N <= degree_bound:
        det = sysm.rewrite_terms(det)
        lead = max(det, key=sysm.key)
        inv = ONE / det[lead]
        sysm.add_rule(lead, {w: -c * inv for w, c in det.items() if w != lead})
    return sysm.complete(max_rules)
