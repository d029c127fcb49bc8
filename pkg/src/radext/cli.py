"""Command-line interface.

Subcommands: reconstruct, verify, crosscheck-delta, minpoly-t.
Exit codes: 0 success, 1 verification failure, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .charp import (
    default_alpha,
    delta_i_direct,
    delta_i_minpoly,
    delta_i_normal_basis,
    make_moore_context,
    normal_basis_find,
    reconstruct_charp,
)
from .errors import CharDividesM, RadextError, VerificationFailed
from .expr import Add, Mul, Pow, Var, poly_to_ast, ratfun_to_ast, to_json, to_latex, to_sexpr, tpoly_to_ast
from .fields import (
    ExtensionField,
    Field,
    PrimeField,
    RationalField,
    is_prime,
)
from .general import (
    GeneralContext,
    minimal_poly_of_T,
    naive_formula,
    rational_coefficient_mask,
    reconstruct_general,
    transpose_to,
)
from .multipoly import RatFun
from .verify import RatFunReconstruction, TrialPlan, verify_cross, verify_reconstruction

_FIELD_RE = re.compile(r"gf:(\d+)(?:\^(\d+))?$")


class UsageError(Exception):
    pass


def parse_field(text: str) -> Field:
    if text == "rational":
        return RationalField()
    mt = _FIELD_RE.fullmatch(text)
    if not mt:
        raise UsageError(f"bad field spec {text!r}; expected rational or gf:<p>[^<e>]")
    p, e = int(mt.group(1)), int(mt.group(2) or 1)
    return PrimeField(p) if e == 1 else ExtensionField(p, e)


def _emit(ast, out: str) -> str:
    if out == "sexpr":
        return to_sexpr(ast)
    if out == "json":
        return to_json(ast)
    if out == "latex":
        return to_latex(ast)
    raise UsageError(f"unknown output format {out!r}")


def _build(method: str, m: int, n: int, field: Field):
    """Build a reconstruction object for evaluation/emission."""
    if method == "general":
        ctx = GeneralContext(m, n, field)
        f = reconstruct_general(ctx)
        mask = rational_coefficient_mask(ctx, f)
        if not all(mask):
            print(f"note: coefficients rational over the base field: {mask}", file=sys.stderr)
        return f
    if method == "charp":
        if field.char == 0:
            raise UsageError("--method charp needs a finite field")
        ctx = make_moore_context(field.char, m, n, getattr(field, "e", 1))
        return reconstruct_charp(ctx)
    if method == "naive":
        if m != 2:
            raise UsageError("--method naive applies only to m = 2")
        if field.char and m % field.char == 0:
            raise CharDividesM(f"characteristic {field.char} divides m={m}")
        return RatFunReconstruction(naive_formula(n, field))
    raise UsageError(f"unknown method {method!r}")


def cmd_reconstruct(args) -> int:
    field = parse_field(args.field)
    f = _build(args.method, args.m, args.n, field)
    if isinstance(f, RatFunReconstruction):
        if args.var != 1:
            perm = {"X1": f"X{args.var}", f"X{args.var}": "X1"}
            rf = RatFun(f.ratfun.num.permute_vars(perm), f.ratfun.den.permute_vars(perm))
            f = RatFunReconstruction(rf)
        ast = ratfun_to_ast(f.ratfun)
    else:
        if args.var != 1:
            f = transpose_to(f, args.var)
        ast = tpoly_to_ast(f)
    print(_emit(ast, args.out))
    return 0


def cmd_verify(args) -> int:
    field = parse_field(args.field)
    fa = _build(args.method, args.m, args.n, field)
    eval_field = field
    if args.method == "charp":
        # points are drawn from GF(q^n) so the Moore determinant can be
        # nonzero (it vanishes on every GF(q)-point)
        ctx = make_moore_context(field.char, args.m, args.n, getattr(field, "e", 1))
        eval_field = ctx.big
    plan = TrialPlan(eval_field, args.trials, args.seed)
    if args.cross:
        fb = _build(args.cross, args.m, args.n, field)
        verdict = verify_cross(fa, fb, plan, bind_t=True)
    else:
        verdict = verify_reconstruction(fa, plan)
    print(json.dumps(verdict.to_json(), sort_keys=True))
    return 0 if verdict.passed else 1


def cmd_crosscheck_delta(args) -> int:
    q, n = args.q, args.n
    if not 2 <= q <= 16 or not 1 <= n <= 4:
        raise UsageError("need a prime power q <= 16 and 1 <= n <= 4")
    p = next((d for d in range(2, q + 1) if q % d == 0), q)
    if not is_prime(p):
        raise UsageError(f"q={q} is not a prime power")
    e = 0
    qq = q
    while qq > 1:
        if qq % p:
            raise UsageError(f"q={q} is not a prime power")
        qq //= p
        e += 1
    ctx = make_moore_context(p, max(q - 1, 1), n, e)
    z = normal_basis_find(ctx)
    alpha = default_alpha(ctx)
    checked = []
    for i in range(n):
        direct = delta_i_direct(ctx.big, q, n, i)
        via_nb = delta_i_normal_basis(ctx, i, z)
        via_mp = delta_i_minpoly(ctx, i, alpha)
        via_mp_sub = delta_i_minpoly(ctx, i, alpha, substituted=True)
        if not (direct == via_nb == via_mp == via_mp_sub):
            print(
                json.dumps({"q": q, "n": n, "passed": False, "failed_at": i}, sort_keys=True)
            )
            return 1
        checked.append(i)
    print(json.dumps({"q": q, "n": n, "passed": True, "checked": checked}, sort_keys=True))
    return 0


def cmd_minpoly_t(args) -> int:
    field = parse_field(args.field)
    ctx = GeneralContext(args.m, args.n, field)
    coeffs = minimal_poly_of_T(ctx)
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        cast = poly_to_ast(c)
        if k == 0:
            parts.append(cast)
            continue
        xpow = Var("X") if k == 1 else Pow(Var("X"), k)
        one = poly_to_ast(type(c).constant(c.field, c.vars, 1))
        parts.append(xpow if cast == one else Mul((cast, xpow)))
    ast = parts[0] if len(parts) == 1 else Add(tuple(parts))
    print(_emit(ast, args.out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="radext", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, method=True):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--field", required=True, help="rational or gf:<p>[^<e>]")
        if method:
            p.add_argument("--method", choices=["general", "charp", "naive"], default="general")

    p = sub.add_parser("reconstruct", help="emit f with X1 = f(..., T)")
    common(p)
    p.add_argument("--out", choices=["sexpr", "json", "latex"], default="sexpr")
    p.add_argument("--var", type=int, default=1, help="reconstruct Xi instead of X1")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", help="randomized identity testing")
    common(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cross", choices=["general", "charp", "naive"], default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crosscheck-delta", help="three-way minor agreement")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_crosscheck_delta)

    p = sub.add_parser("minpoly-t", help="minimal polynomial of T over F(X^m)")
    common(p, method=False)
    p.add_argument("--out", choices=["sexpr", "json", "latex"], default="sexpr")
    p.set_defaults(func=cmd_minpoly_t)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except CharDividesM:
        print("char divides m", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except RadextError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
