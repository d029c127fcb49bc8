"""Expression trees and their three textual encodings.

The AST covers sums, products, integer powers, and one level of ratio,
with atoms for variables (X1..Xn, T), the root-of-unity literal eps, the
field-generator literal g, and scalar literals.  Scalar literal forms:
integers (`-3`), rationals (`1:2`), prime-field representatives (`#4`).
Extension-field and cyclotomic scalars are expressed structurally as
polynomials in g resp. eps, so every coefficient field is covered by the
same small grammar.

Encodings: s-expressions `(+ ...) (* ...) (^ a k) (/ a b)` and a JSON
mirror, both round-trippable; LaTeX for display only.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from gmpy2 import mpq

from .errors import InvalidParameter
from .fields import (
    CyclotomicField,
    Element,
    ExtensionField,
    PrimeField,
    RationalField,
)
from .multipoly import MultiPoly, RatFun, TPoly


class ExprAST:
    __slots__ = ()


@dataclass(frozen=True)
class Var(ExprAST):
    name: str


@dataclass(frozen=True)
class Const(ExprAST):
    lit: str  # canonical literal text: "-3", "1:2", or "#4"


@dataclass(frozen=True)
class Add(ExprAST):
    args: tuple

    def __post_init__(self):
        if len(self.args) < 2:
            raise InvalidParameter("+ needs at least two operands")


@dataclass(frozen=True)
class Mul(ExprAST):
    args: tuple

    def __post_init__(self):
        if len(self.args) < 2:
            raise InvalidParameter("* needs at least two operands")


@dataclass(frozen=True)
class Pow(ExprAST):
    base: ExprAST
    exp: int

    def __post_init__(self):
        if not isinstance(self.exp, int):
            raise InvalidParameter("power exponents must be integers")


@dataclass(frozen=True)
class Ratio(ExprAST):
    num: ExprAST
    den: ExprAST

    def __post_init__(self):
        if self.den == Const("0") or self.den == Const("#0"):
            raise InvalidParameter("syntactically zero denominator")


# ---------------------------------------------------------------------------
# field elements -> AST


def _rat_lit(v: mpq) -> str:
    return f"{v.numerator}:{v.denominator}" if v.denominator != 1 else str(v.numerator)


def _gen_poly_ast(coeffs, gen_name: str, coeff_ast) -> ExprAST:
    """sum_i coeffs[i] * gen^i as an AST, highest power first."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        catom = coeff_ast(c)
        if i == 0:
            parts.append(catom)
            continue
        gpow = Var(gen_name) if i == 1 else Pow(Var(gen_name), i)
        parts.append(gpow if _is_one_lit(catom) else Mul((catom, gpow)))
    if not parts:
        return coeff_ast(0)
    return parts[0] if len(parts) == 1 else Add(tuple(parts))


def _is_one_lit(a: ExprAST) -> bool:
    return a in (Const("1"), Const("#1"))


def element_to_ast(x: Element) -> ExprAST:
    f = x.field
    if isinstance(f, RationalField):
        return Const(_rat_lit(x.rep))
    if isinstance(f, PrimeField):
        return Const(f"#{x.rep}")
    if isinstance(f, ExtensionField):
        return _gen_poly_ast(list(x.rep), "g", lambda c: Const(f"#{c}"))
    if isinstance(f, CyclotomicField):
        return _gen_poly_ast(list(x.rep), "eps", lambda c: Const(_rat_lit(mpq(c))))
    raise InvalidParameter(f"no literal form for elements of {f}")


def _is_one_elem(x: Element) -> bool:
    return x.rep == x.field.one_rep


# ---------------------------------------------------------------------------
# polynomials and rational functions -> AST


def poly_to_ast(p: MultiPoly) -> ExprAST:
    if p.is_zero():
        return element_to_ast(p.field.zero())
    parts = []
    for e, c in p.sorted_terms():
        factors = []
        coeff = Element(p.field, c)
        if not _is_one_elem(coeff) or not any(e):
            factors.append(element_to_ast(coeff))
        for v, x in zip(p.vars, e):
            if x == 1:
                factors.append(Var(v))
            elif x > 1:
                factors.append(Pow(Var(v), x))
        parts.append(factors[0] if len(factors) == 1 else Mul(tuple(factors)))
    return parts[0] if len(parts) == 1 else Add(tuple(parts))


def ratfun_to_ast(f: RatFun) -> ExprAST:
    if f.den.is_constant():
        c = f.den.constant_value()
        num = f.num if c == 1 else f.num.scale(c.inverse())
        return poly_to_ast(num)
    return Ratio(poly_to_ast(f.num), poly_to_ast(f.den))


def tpoly_to_ast(f: TPoly) -> ExprAST:
    if not f.coeffs:
        return Const("0")
    parts = []
    for t, c in reversed(f.coeffs):
        cast = ratfun_to_ast(c)
        tpow = Var("T") if t == 1 else Pow(Var("T"), t)
        if t == 0:
            parts.append(cast)
        elif _is_one_lit(cast):
            parts.append(tpow)
        else:
            parts.append(Mul((cast, tpow)))
    return parts[0] if len(parts) == 1 else Add(tuple(parts))


# ---------------------------------------------------------------------------
# s-expressions

_ATOM_RE = re.compile(r"-?\d+:\d+|#-?\d+|-?\d+|[A-Za-z][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")


def to_sexpr(a: ExprAST) -> str:
    if isinstance(a, Var):
        return a.name
    if isinstance(a, Const):
        return a.lit
    if isinstance(a, Add):
        return "(+ " + " ".join(to_sexpr(x) for x in a.args) + ")"
    if isinstance(a, Mul):
        return "(* " + " ".join(to_sexpr(x) for x in a.args) + ")"
    if isinstance(a, Pow):
        return f"(^ {to_sexpr(a.base)} {a.exp})"
    if isinstance(a, Ratio):
        return f"(/ {to_sexpr(a.num)} {to_sexpr(a.den)})"
    raise InvalidParameter(f"not an expression node: {a!r}")


def parse_sexpr(text: str) -> ExprAST:
    tokens = _TOKEN_RE.findall(text)
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise InvalidParameter("unexpected end of input")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens):
                raise InvalidParameter("unexpected end of input")
            op = tokens[pos]
            pos += 1
            args = []
            while pos < len(tokens) and tokens[pos] != ")":
                args.append(parse())
            if pos >= len(tokens):
                raise InvalidParameter("missing )")
            pos += 1
            if op == "+":
                return Add(tuple(args))
            if op == "*":
                return Mul(tuple(args))
            if op == "^":
                if len(args) != 2 or not isinstance(args[1], Const):
                    raise InvalidParameter("^ needs a base and an integer")
                return Pow(args[0], int(args[1].lit))
            if op == "/":
                if len(args) != 2:
                    raise InvalidParameter("/ needs two operands")
                return Ratio(args[0], args[1])
            raise InvalidParameter(f"unknown operator {op!r}")
        if tok == ")":
            raise InvalidParameter("unexpected )")
        if not _ATOM_RE.fullmatch(tok):
            raise InvalidParameter(f"bad atom {tok!r}")
        if tok[0] == "#" or tok.lstrip("-")[0].isdigit():
            return Const(tok)
        return Var(tok)

    out = parse()
    if pos != len(tokens):
        raise InvalidParameter("trailing tokens")
    return out


# ---------------------------------------------------------------------------
# JSON mirror


def to_json_dict(a: ExprAST) -> dict:
    if isinstance(a, Var):
        return {"kind": "var", "name": a.name}
    if isinstance(a, Const):
        return {"kind": "const", "value": a.lit}
    if isinstance(a, Add):
        return {"kind": "add", "args": [to_json_dict(x) for x in a.args]}
    if isinstance(a, Mul):
        return {"kind": "mul", "args": [to_json_dict(x) for x in a.args]}
    if isinstance(a, Pow):
        return {"kind": "pow", "base": to_json_dict(a.base), "exp": a.exp}
    if isinstance(a, Ratio):
        return {"kind": "ratio", "num": to_json_dict(a.num), "den": to_json_dict(a.den)}
    raise InvalidParameter(f"not an expression node: {a!r}")


def from_json_dict(d: dict) -> ExprAST:
    kind = d.get("kind")
    if kind == "var":
        return Var(d["name"])
    if kind == "const":
        return Const(d["value"])
    if kind == "add":
        return Add(tuple(from_json_dict(x) for x in d["args"]))
    if kind == "mul":
        return Mul(tuple(from_json_dict(x) for x in d["args"]))
    if kind == "pow":
        return Pow(from_json_dict(d["base"]), d["exp"])
    if kind == "ratio":
        return Ratio(from_json_dict(d["num"]), from_json_dict(d["den"]))
    raise InvalidParameter(f"unknown node kind {kind!r}")


def to_json(a: ExprAST) -> str:
    return json.dumps(to_json_dict(a), separators=(",", ":"), sort_keys=True)


def from_json(text: str) -> ExprAST:
    return from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# LaTeX (display only)

_VAR_RE = re.compile(r"([A-Za-z]+)(\d+)$")


def _latex_atom(name: str) -> str:
    if name == "eps":
        return r"\varepsilon"
    m = _VAR_RE.fullmatch(name)
    if m:
        return f"{m.group(1)}_{{{m.group(2)}}}"
    return name


def _latex_lit(lit: str) -> str:
    if lit.startswith("#"):
        return lit[1:]
    if ":" in lit:
        p, q = lit.split(":")
        sign = "-" if p.startswith("-") else ""
        return rf"{sign}\tfrac{{{p.lstrip('-')}}}{{{q}}}"
    return lit


def _needs_parens(a: ExprAST, context: str) -> bool:
    if isinstance(a, Add):
        return context in ("mul", "pow")
    if context == "pow" and isinstance(a, (Mul, Ratio)):
        return True
    if isinstance(a, Const) and a.lit.lstrip("#").startswith("-"):
        return context in ("mul", "pow")
    return False


def to_latex(a: ExprAST, _context: str = "top") -> str:
    if isinstance(a, Var):
        s = _latex_atom(a.name)
    elif isinstance(a, Const):
        s = _latex_lit(a.lit)
    elif isinstance(a, Add):
        body = ""
        for i, x in enumerate(a.args):
            part = to_latex(x, "add")
            if i and not part.startswith("-"):
                body += " + " + part
            elif i:
                body += " " + part
            else:
                body = part
        s = body
        if _needs_parens(a, _context):
            return rf"\left({s}\right)"
        return s
    elif isinstance(a, Mul):
        s = " ".join(to_latex(x, "mul") for x in a.args)
    elif isinstance(a, Pow):
        s = f"{to_latex(a.base, 'pow')}^{{{a.exp}}}"
    elif isinstance(a, Ratio):
        s = rf"\frac{{{to_latex(a.num, 'top')}}}{{{to_latex(a.den, 'top')}}}"
    else:
        raise InvalidParameter(f"not an expression node: {a!r}")
    if _needs_parens(a, _context):
        return rf"\left({s}\right)"
    return s
