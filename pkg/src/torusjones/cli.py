"""Command-line front end.

    torusjones jones  --s 2 --t 3 --n 4 [--method morton] [--format plain|json|latex]
    torusjones verify --suite all|methods|recursions|hseries|alexander|aj [--max-t 7] [--max-n 12]
    torusjones apoly  --s 3 --t 4 [--format plain|json|latex]

Exit codes: 0 pass, 1 check failure, 2 usage error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .ajpoly import apply_operator, check_aj, homogenize, recursion_as_operator
from .alexander import alexander_poly, inverse_series
from .exactalg import InvalidArgument, LaurentQ
from .hseries import h_chi_series, h_series, verify_h_difference
from .jones import (
    Method,
    TorusKnotId,
    jones,
    jones_morton,
    verify_jones_recursion2,
    verify_k_recursion1,
    verify_k_recursion2,
)
from .render import latex

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

METHOD_ALIASES = {
    "morton": Method.MORTON,
    "via-k": Method.VIA_K,
    "via_k": Method.VIA_K,
    "recursion1": Method.RECURSION1,
    "hyper": Method.HYPERGEOMETRIC,
    "hypergeometric": Method.HYPERGEOMETRIC,
    "cyclotomic": Method.CYCLOTOMIC,
    "t34": Method.T34,
}

SUITES = ("methods", "recursions", "hseries", "alexander", "aj")


def render_laurent(p: LaurentQ, fmt: str, var: str = "q") -> str:
    if fmt == "json":
        return json.dumps(p.to_json())
    if fmt == "latex":
        return latex(p.terms(), var)
    return p.to_plain(var)


def _knot_arg(s: int, t: int) -> TorusKnotId:
    if s >= t:
        raise InvalidArgument(f"need s < t, got s={s}, t={t}")
    return TorusKnotId(s, t)


# -- jones ------------------------------------------------------------------


def cmd_jones(args) -> int:
    try:
        knot = _knot_arg(args.s, args.t)
        if args.n < 1:
            raise InvalidArgument("--n must be at least 1")
        method = METHOD_ALIASES[args.method]
        value = jones(knot, args.n, method)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        out = {
            "knot": [knot.s, knot.t],
            "n": args.n,
            "method": value.method.value,
            "value": value.value.to_json(),
        }
        print(json.dumps(out))
    else:
        print(render_laurent(value.value, args.format))
    return EXIT_OK


# -- verify -------------------------------------------------------------


def grid_knots(max_t: int) -> list[TorusKnotId]:
    return [
        TorusKnotId(s, t)
        for t in range(3, max_t + 1)
        for s in range(2, t)
        if gcd(s, t) == 1
    ]


def _methods_check(s, t, N):
    knot = TorusKnotId(s, t)
    ref = jones_morton(knot, N).value
    names = [Method.VIA_K]
    if knot.is_two_strand:
        names += [Method.RECURSION1, Method.HYPERGEOMETRIC, Method.CYCLOTOMIC]
    if (s, t) == (3, 4):
        names.append(Method.T34)
    bad = [m.value for m in names if jones(knot, N, m).value != ref]
    return not bad, "morton=" + "=".join(m.value for m in names) + (f" mismatch: {','.join(bad)}" if bad else "")


def _aj_check(s, t):
    r = check_aj(TorusKnotId(s, t))
    return r.match, f"computed {r.computed.to_plain()} reference {r.reference.to_plain()}"


def _annihilation_check(s, t, N):
    knot = TorusKnotId(s, t)
    op = homogenize(recursion_as_operator(knot, 1 if s == 2 else 2))
    num, _ = apply_operator(op, lambda n: jones_morton(knot, n).value, N)
    return num.is_zero(), f"homogenized order-{op.order} operator"


def _alexander_check(s, t):
    knot = TorusKnotId(s, t)
    chi = knot.chi
    n_max = 3 * chi.modulus
    ser = inverse_series(knot, n_max)
    delta = alexander_poly(knot)
    ok = all(ser[n] == chi(n) for n in range(n_max + 1))
    ok = ok and delta == delta.subst_inverse() and delta.at_one() == 1
    return ok, f"series to n={n_max} equals chi; palindromic; Delta(1)=1"


def _run(task):
    kind, args = task[0], task[1:]
    if kind == "methods":
        return _methods_check(*args)
    if kind == "k2":
        return verify_k_recursion2(TorusKnotId(args[0], args[1]), args[2]), "K second-order"
    if kind == "j2":
        return verify_jones_recursion2(TorusKnotId(args[0], args[1]), args[2]), "J second-order"
    if kind == "k1":
        return verify_k_recursion1((args[1] - 1) // 2, args[2]), "K first-order"
    if kind == "hseq":
        m, order = args
        return h_series(m, order) == h_chi_series(m, order), f"multi-sum = chi-sum to x^{order}"
    if kind == "hdiff":
        m, order = args
        return verify_h_difference(m, order), f"q-difference to x^{order}"
    if kind == "alexander":
        return _alexander_check(*args)
    if kind == "aj":
        return _aj_check(*args)
    if kind == "annihilate":
        return _annihilation_check(*args)
    raise ValueError(kind)


def build_tasks(suite: str, max_t: int, max_n: int, h_order: int = 30) -> list[tuple]:
    knots = grid_knots(max_t)
    suites = SUITES if suite == "all" else (suite,)
    tasks: list[tuple] = []
    for name in suites:
        if name == "methods":
            tasks += [("methods", k.s, k.t, N) for k in knots for N in range(1, max_n + 1)]
        elif name == "recursions":
            for k in knots:
                tasks += [("k2", k.s, k.t, N) for N in range(2, max_n + 1)]
                tasks += [("j2", k.s, k.t, N) for N in range(3, max_n + 1)]
                if k.is_two_strand:
                    tasks += [("k1", k.s, k.t, N) for N in range(1, max_n + 1)]
        elif name == "hseries":
            for m in range(1, (max_t - 1) // 2 + 1):
                tasks += [("hseq", m, h_order), ("hdiff", m, h_order)]
        elif name == "alexander":
            tasks += [("alexander", k.s, k.t) for k in knots]
        elif name == "aj":
            for k in knots:
                tasks.append(("aj", k.s, k.t))
                tasks += [("annihilate", k.s, k.t, N) for N in range(3, 11)]
    return tasks


def _label(task) -> str:
    kind = task[0]
    if kind in ("hseq", "hdiff"):
        return f"{kind:<10} T(2,{2 * task[1] + 1})"
    knot = f"T({task[1]},{task[2]})"
    if len(task) > 3:
        return f"{kind:<10} {knot} N={task[3]}"
    return f"{kind:<10} {knot}"


def run_tasks(tasks, jobs: int = 1):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, tasks, chunksize=4))
    return [_run(t) for t in tasks]


def cmd_verify(args) -> int:
    if args.max_t < 3 or args.max_n < 1 or args.jobs < 1 or args.h_order < 1:
        print("error: need --max-t >= 3, --max-n >= 1, --jobs >= 1, --h-order >= 1", file=sys.stderr)
        return EXIT_USAGE
    tasks = build_tasks(args.suite, args.max_t, args.max_n, args.h_order)
    try:
        results = run_tasks(tasks, args.jobs)
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    failed = 0
    for task, (ok, detail) in zip(tasks, results):
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {_label(task)}  {detail}")
    print(f"{len(tasks) - failed}/{len(tasks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- apoly ------------------------------------------------------------------


def cmd_apoly(args) -> int:
    try:
        knot = _knot_arg(args.s, args.t)
        if args.order is not None and args.order == 1 and knot.s != 2:
            raise InvalidArgument("the first-order recursion requires s = 2")
        report = check_aj(knot, args.order)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        render = (lambda a: a.to_latex()) if args.format == "latex" else (lambda a: a.to_plain())
        print(f"computed:  {render(report.computed)}")
        print(f"reference: {render(report.reference)}")
        if not report.match and report.divisible:
            print(f"cofactor:  {render(report.cofactor)}")
        print("MATCH" if report.match else "MISMATCH")
    return EXIT_OK if report.match else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torusjones", description="Colored Jones polynomials of torus knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jones", help="compute J_T(s,t)(N)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=sorted(METHOD_ALIASES), default="morton")
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-t", type=int, default=7)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--h-order", type=int, default=30)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("apoly", help="derive the A-polynomial from the recursion")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--order", type=int, choices=(1, 2), default=None)
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.set_defaults(func=cmd_apoly)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
