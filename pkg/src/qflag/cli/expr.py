"""Expression language for the command line.

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := atom ("^" ["-"] INT)? "†"*
    atom   := INT | q | s | u[i,j] | z[i] | zs[i] | x[i] | y[i]
            | D[i,...;j,...] | act(word; expr) | "(" expr ")"
    word   := letter ("*" letter)*      letter := K[r] | Kinv[r] | E[r] | F[r]

Division is only allowed by scalars.  ``†`` is the involution.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..ncalg import NCPoly, algebra, quantum_minor, sphere_element, star
from ..ncalg.algebra import BoundExceeded
from ..scalar import ScalarQ
from ..uqact import UqElement, act_d


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\S))")
_LETTERS = {"K": "K", "Kinv": "Ki", "E": "E", "F": "F"}


@dataclass
class Tok:
    kind: str  # int, name, sym, end
    text: str
    pos: int


def tokenize(text: str) -> list[Tok]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(1):
            out.append(Tok("int", m.group(1), m.start(1)))
        elif m.group(2):
            out.append(Tok("name", m.group(2), m.start(2)))
        else:
            out.append(Tok("sym", m.group(3), m.start(3)))
        pos = m.end()
    out.append(Tok("end", "", len(text)))
    return out


class Parser:
    """Recursive-descent parser producing a small AST of tuples."""

    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Tok:
        return self.toks[self.i]

    def next(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str):
        pos = self.peek().pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        raise ParseError(f"{msg} at line {line}, column {col}: {self.text!r}")

    def expect(self, sym: str):
        t = self.next()
        if t.text != sym:
            self.i -= 1
            self.error(f"expected {sym!r}")

    def accept(self, sym: str) -> bool:
        if self.peek().text == sym and self.peek().kind == "sym":
            self.i += 1
            return True
        return False

    def parse(self):
        node = self.expr()
        if self.peek().kind != "end":
            self.error("unexpected input")
        return node

    def expr(self):
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        node = self.term()
        if sign < 0:
            node = ("neg", node)
        while True:
            if self.accept("+"):
                node = ("add", node, self.term())
            elif self.accept("-"):
                node = ("sub", node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            if self.accept("*"):
                node = ("mul", node, self.factor())
            elif self.accept("/"):
                node = ("div", node, self.factor())
            else:
                return node

    def factor(self):
        node = self.atom()
        if self.accept("^"):
            neg = self.accept("-")
            t = self.next()
            if t.kind != "int":
                self.i -= 1
                self.error("expected integer exponent")
            node = ("pow", node, -int(t.text) if neg else int(t.text))
        while self.accept("†"):
            node = ("star", node)
        return node

    def ints(self, closer: str) -> list[int]:
        vals = []
        while True:
            t = self.next()
            if t.kind != "int":
                self.i -= 1
                self.error("expected integer index")
            vals.append(int(t.text))
            if not self.accept(","):
                break
        if self.peek().text != closer:
            self.error(f"expected {closer!r}")
        return vals

    def atom(self):
        t = self.next()
        if t.kind == "int":
            return ("int", int(t.text))
        if t.kind == "sym" and t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        if t.kind != "name":
            self.i -= 1
            self.error("expected an atom")
        name = t.text
        if name in ("q", "s"):
            return ("var", name)
        if name == "act":
            self.expect("(")
            word = self.word()
            self.expect(";")
            inner = self.expr()
            self.expect(")")
            return ("act", word, inner)
        if name == "D":
            self.expect("[")
            rows = self.ints(";")
            self.expect(";")
            cols = self.ints("]")
            self.expect("]")
            return ("minor", tuple(rows), tuple(cols))
        if name in ("u", "z", "zs", "x", "y"):
            self.expect("[")
            idx = self.ints("]")
            self.expect("]")
            want = 2 if name == "u" else 1
            if len(idx) != want:
                self.error(f"{name}[...] takes {want} index(es)")
            return (name, tuple(idx))
        self.i -= 1
        self.error(f"unknown name {name!r}")

    def word(self):
        letters = []
        while True:
            t = self.next()
            if t.kind != "name" or t.text not in _LETTERS:
                self.i -= 1
                self.error("expected K[r], Kinv[r], E[r] or F[r]")
            self.expect("[")
            (r,) = self.ints("]")
            self.expect("]")
            letters.append((_LETTERS[t.text], r))
            if not self.accept("*"):
                return tuple(letters)


def parse(text: str):
    return Parser(text).parse()


def check_indices(node, N: int):
    """Reject generator, sphere, minor and action indices outside the rank."""
    kind = node[0]
    if kind == "u" and not all(1 <= i <= N for i in node[1]):
        raise ParseError(f"u[{node[1][0]},{node[1][1]}] out of range for N={N}")
    if kind in ("z", "zs", "x", "y") and not 1 <= node[1][0] <= N:
        raise ParseError(f"{kind}[{node[1][0]}] out of range for N={N}")
    if kind == "minor":
        if len(node[1]) != len(node[2]):
            raise ParseError("minor needs equally many rows and columns")
        if not all(1 <= i <= N for i in node[1] + node[2]):
            raise ParseError(f"minor index out of range for N={N}")
    if kind == "act":
        for _, r in node[1]:
            if not 1 <= r <= N - 1:
                raise ParseError(f"generator index {r} out of range for N={N}")
        check_indices(node[2], N)
    for child in node[1:]:
        if isinstance(child, tuple) and child and isinstance(child[0], str):
            check_indices(child, N)


def parse_expr(text: str, N: int):
    """Parse and validate against the rank ``N``."""
    node = parse(text)
    check_indices(node, N)
    return node


def degree(node, N: int) -> int:
    """Upper bound on the degree in the generators before reduction."""
    kind = node[0]
    if kind in ("int", "var"):
        return 0
    if kind == "u":
        return 1
    if kind == "z":
        return 1
    if kind == "zs":
        return N - 1
    if kind in ("x", "y"):
        return N
    if kind == "minor":
        return len(node[1])
    if kind in ("add", "sub"):
        return max(degree(node[1], N), degree(node[2], N))
    if kind == "mul":
        return degree(node[1], N) + degree(node[2], N)
    if kind == "div":
        return degree(node[1], N)
    if kind == "neg":
        return degree(node[1], N)
    if kind == "pow":
        return degree(node[1], N) * max(node[2], 0)
    if kind == "star":
        return degree(node[1], N) * (N - 1)
    if kind == "act":
        return degree(node[2], N)
    raise ValueError(kind)


def evaluate(node, N: int, bound: int | None = None):
    """Evaluate to an :class:`NCPoly` (scalars are lifted)."""
    if bound is not None and degree(node, N) > bound:
        raise BoundExceeded(f"expression degree {degree(node, N)} exceeds bound {bound}")
    val = _eval(node, algebra(N))
    if isinstance(val, ScalarQ):
        return algebra(N).scalar(val)
    return val


def _eval(node, alg):
    kind = node[0]
    N = alg.N
    if kind == "int":
        return ScalarQ(node[1])
    if kind == "var":
        return ScalarQ.s_pow(2 if node[1] == "q" else 1)
    if kind == "u":
        return alg.u(*node[1])
    if kind in ("z", "zs", "x", "y"):
        (i,) = node[1]
        if not 1 <= i <= N:
            raise ParseError(f"{kind}[{i}] out of range for N={N}")
        return sphere_element(alg, kind, i)
    if kind == "minor":
        rows, cols = node[1], node[2]
        for v in rows + cols:
            if not 1 <= v <= N:
                raise ParseError(f"minor index {v} out of range for N={N}")
        return quantum_minor(alg, rows, cols)
    if kind == "neg":
        return -_eval(node[1], alg)
    if kind in ("add", "sub", "mul"):
        a, b = _eval(node[1], alg), _eval(node[2], alg)
        if kind == "mul" and isinstance(a, ScalarQ) and isinstance(b, NCPoly):
            return b * a
        if isinstance(a, ScalarQ) and isinstance(b, NCPoly):
            a = alg.scalar(a)
        return a + b if kind == "add" else (a - b if kind == "sub" else a * b)
    if kind == "div":
        a, b = _eval(node[1], alg), _eval(node[2], alg)
        if isinstance(b, NCPoly):
            if set(b.terms) - {()}:
                raise ParseError("division by a non-scalar")
            b = b.constant()
        if not b:
            raise ParseError("division by zero")
        return a / b
    if kind == "pow":
        a, n = _eval(node[1], alg), node[2]
        if isinstance(a, NCPoly):
            if n < 0:
                raise ParseError("negative power of a non-scalar")
            return a ** n
        return a ** n
    if kind == "star":
        a = _eval(node[1], alg)
        return a if isinstance(a, ScalarQ) else star(a)
    if kind == "act":
        word, inner = node[1], node[2]
        for _, r in word:
            if not 1 <= r <= N - 1:
                raise ParseError(f"generator index {r} out of range for N={N}")
        x = _eval(inner, alg)
        if isinstance(x, ScalarQ):
            x = alg.scalar(x)
        return act_d(UqElement.word(N, word), x)
    raise ParseError(f"cannot evaluate {kind}")
