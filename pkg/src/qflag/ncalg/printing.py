from __future__ import annotations

from ..scalar import ScalarQ


def format_coeff(c: ScalarQ) -> tuple[str, str]:
    """Split a coefficient into a sign and a printable magnitude."""
    if c.is_monomial():
        e, v = c.num[0]
        sign = "-" if v < 0 else "+"
        return sign, str(ScalarQ.s_pow(e, abs(v)))
    return "+", f"({c})"


def format_poly(p) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for word, c in p.words():
        sign, mag = format_coeff(c)
        mono = "*".join(f"u[{i},{j}]" for i, j in word)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_to_json(p) -> list:
    out = []
    for word, c in p.words():
        num, den = c.to_sparse_s()
        out.append({"word": [list(x) for x in word], "coeff_num": num, "coeff_den": den})
    return out


def poly_from_json(alg, items) -> "object":
    raw = {}
    for item in items:
        w = tuple(tuple(x) for x in item["word"])
        raw[w] = ScalarQ.from_sparse_s(item["coeff_num"], item["coeff_den"])
    return alg.reduce(raw)
