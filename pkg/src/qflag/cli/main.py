"""``qflag`` command line: reduce, verify, mk, approx."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction

from ..ncalg import format_poly, poly_to_json
from ..ncalg.algebra import BoundExceeded
from ..qmetric import (c_q, counit_state, envelope, haar_state, hk_state, mk_closed_form,
                       parse_state, psi_bound_check, psi_error, random_qfunction,
                       seminorm_grad, tail_length)
from ..verify import SUITES, report, run_suite
from .expr import ParseError, evaluate, parse_expr

EXIT_VERIFY_FAIL = 1
EXIT_PARSE = 2
EXIT_BOUND = 3


def _fmt(x) -> str:
    return "{:.12g}".format(float(x))


def _mode(args) -> str:
    env = os.environ.get("QFLAG_MODE")
    mode = env or args.mode
    if mode not in ("exact", "float"):
        raise ParseError(f"unknown mode {mode!r}")
    return mode


def _q(args, mode: str):
    try:
        q = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot read q={args.q!r}")
    if not 0 < q < 1:
        raise ParseError("q must lie in (0, 1)")
    return q if mode == "exact" else float(q)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_reduce(args) -> int:
    node = parse_expr(args.expr, args.N)
    p = evaluate(node, args.N, bound=args.bound)
    if args.format == "json":
        text = json.dumps({"N": args.N, "terms": poly_to_json(p)}, indent=2) + "\n"
    else:
        text = format_poly(p) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.N < 2:
        raise ParseError("N must be at least 2")
    checks = run_suite(args.suite, args.N)
    rep = report(args.suite, args.N, checks)
    _emit(json.dumps(rep, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_VERIFY_FAIL if rep["summary"]["fail"] else 0


def cmd_mk(args) -> int:
    mode = _mode(args)
    q = _q(args, mode)
    names = [s for s in args.states.split(",") if s.strip()]
    states = [parse_state(n, q, args.T) for n in names]
    T = max(s.T for s in states)
    states = [s.retruncate(T) for s in states]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["q", "k", "state_a", "state_b", "mk_upper", "tail_bound", "T"])
    tail = tail_length(q, T)
    for i, a in enumerate(states):
        for b in states[i:]:
            k = a.label[1:] if a.label.startswith("h") else ""
            w.writerow([_fmt(q), k, a.label, b.label, _fmt(mk_closed_form(a, b)), _fmt(tail), T])
    status = 0
    problems = []
    if args.assert_monotone or args.assert_envelope:
        ks = sorted(int(n[1:]) for n in names if n.startswith("h") and n[1:].isdigit())
        base = haar_state(q, args.T)
        eps = counit_state(q)
        vals = {k: mk_closed_form(hk_state(k, base) if k else base, eps) for k in ks}
        if args.assert_monotone:
            for k1, k2 in zip(ks, ks[1:]):
                if not float(vals[k2]) < float(vals[k1]):
                    problems.append(f"mk(h{k2}, eps) is not below mk(h{k1}, eps)")
        if args.assert_envelope:
            for k in ks:
                if float(vals[k]) > envelope(q, k, args.T + k) * (1 + 1e-12):
                    problems.append(f"mk(h{k}, eps) exceeds the envelope")
    _emit(buf.getvalue(), args.out)
    for msg in problems:
        print(msg, file=sys.stderr)
        status = EXIT_VERIFY_FAIL
    return status


def cmd_approx(args) -> int:
    mode = _mode(args)
    q = _q(args, mode)
    if args.level > args.T:
        raise ParseError(f"level {args.level} exceeds truncation T={args.T}")
    rng = random.Random(args.seed)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["f_id", "q", "level", "err", "bound", "margin", "pass"])
    status = 0
    for fid in range(args.count):
        f = random_qfunction(rng, q, args.T)
        err = psi_error(f, args.level)
        bound = c_q(q) * float(q) ** args.level * seminorm_grad(f)
        ok = psi_bound_check(f, args.level)
        if not ok:
            status = EXIT_VERIFY_FAIL
        w.writerow([fid, _fmt(q), args.level, _fmt(err), _fmt(bound), _fmt(bound - float(err)),
                    "pass" if ok else "fail"])
    _emit(buf.getvalue(), args.out)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", type=int, default=2, help="rank of SU_q(N) (default 2)")
    common.add_argument("--q", default="0.5", help="deformation parameter in (0,1); fractions allowed")
    common.add_argument("-T", type=int, default=60, help="truncation level on I_q (default 60)")
    common.add_argument("--bound", type=int, default=8, help="degree bound for rewriting (default 8)")
    common.add_argument("--mode", choices=("exact", "float"), default="float",
                        help="arithmetic for metric commands; QFLAG_MODE overrides")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=42)

    p = argparse.ArgumentParser(prog="qflag", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reduce", parents=[common], help="print the normal form of an expression")
    r.add_argument("expr")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify", parents=[common], help="run an identity suite, JSON report")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("mk", parents=[common], help="pairwise distance table as CSV")
    m.add_argument("--states", default="h0,eps", help="comma list of eps and h<k>")
    m.add_argument("--assert-monotone", action="store_true")
    m.add_argument("--assert-envelope", action="store_true")
    m.set_defaults(func=cmd_mk)

    a = sub.add_parser("approx", parents=[common], help="truncation error experiment as CSV")
    a.add_argument("--level", type=int, default=3)
    a.add_argument("--count", type=int, default=20)
    a.set_defaults(func=cmd_approx)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ParseError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
