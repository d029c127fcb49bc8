"""Sparse exact multivariate polynomials and rational functions.

A MultiPoly maps exponent vectors (tuples, one slot per declared variable)
to nonzero coefficient representatives of its field.  The zero polynomial
has no terms.  Term order is graded lexicographic in the declared variable
order; it fixes leading coefficients, printing and the RatFun
normalization (monic denominator).

Rational functions are *not* gcd-reduced: equality is functional, by
cross multiplication.  A light reduction cancelling a common monomial
factor keeps sizes down.
"""

from __future__ import annotations

from .errors import (
    DivisionByZeroRatFun,
    EvalDenominatorZero,
    FieldMismatch,
    IndexOutOfRange,
    InvalidParameter,
    NoSuchRoot,
    NotSquare,
    UnboundVariable,
    VariableMismatch,
)
from .fields import (
    CyclotomicField,
    Element,
    ExtensionField,
    Field,
    PrimeField,
    RationalField,
    embedding,
    min_frobenius_exponent,
    primitive_root_of_unity,
)


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: Field, variables, terms: dict):
        self.field = field
        self.vars = tuple(variables)
        self.terms = terms  # exponent tuple -> nonzero coefficient rep

    # construction --------------------------------------------------------

    @classmethod
    def zero(cls, field, variables):
        return cls(field, variables, {})

    @classmethod
    def constant(cls, field, variables, c):
        rep = field.elem(c).rep
        nv = len(tuple(variables))
        if rep == field.zero_rep:
            return cls(field, variables, {})
        return cls(field, variables, {(0,) * nv: rep})

    @classmethod
    def variable(cls, field, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise UnboundVariable(f"{name} not among {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(field, variables, {exps: field.one_rep})

    @classmethod
    def monomial(cls, field, variables, exps, coeff=1):
        rep = field.elem(coeff).rep
        if rep == field.zero_rep:
            return cls(field, variables, {})
        return cls(field, variables, {tuple(exps): rep})

    # predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Element:
        if self.is_zero():
            return Element(self.field, self.field.zero_rep)
        ((exps, rep),) = self.terms.items()
        if any(exps):
            raise InvalidParameter("polynomial is not constant")
        return Element(self.field, rep)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def leading(self):
        """(exponents, coefficient rep) of the graded-lex leading term."""
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def leading_coeff(self) -> Element:
        return Element(self.field, self.leading()[1])

    def coeff(self, exps) -> Element:
        return Element(self.field, self.terms.get(tuple(exps), self.field.zero_rep))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    # arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.vars != other.vars:
            raise VariableMismatch(f"{self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Element)):
            other = MultiPoly.constant(self.field, self.vars, other)
        self._check(other)
        fadd, z = self.field.add, self.field.zero_rep
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = fadd(out.get(e, z), c)
            if s == z:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.field, self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        fneg = self.field.neg
        return MultiPoly(self.field, self.vars, {e: fneg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Element)):
            other = MultiPoly.constant(self.field, self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Element)):
            return self.scale(self.field.elem(other))
        self._check(other)
        a, b = self.terms, other.terms
        if len(b) < len(a):
            a, b = b, a
        fadd, fmul, z = self.field.add, self.field.mul, self.field.zero_rep
        out: dict = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                s = fadd(get(key, z), fmul(c1, c2))
                if s == z:
                    out.pop(key, None)
                else:
                    out[key] = s
        return MultiPoly(self.field, self.vars, out)

    __rmul__ = __mul__

    def scale(self, c: Element):
        rep = self.field.elem(c).rep
        if rep == self.field.zero_rep:
            return MultiPoly.zero(self.field, self.vars)
        fmul = self.field.mul
        return MultiPoly(self.field, self.vars, {e: fmul(x, rep) for e, x in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidParameter("negative polynomial power")
        result = MultiPoly.constant(self.field, self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            if base_needed:
                base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (
                self.field == other.field
                and self.vars == other.vars
                and self.terms == other.terms
            )
        if isinstance(other, (int, Element)):
            return self == MultiPoly.constant(self.field, self.vars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.vars, frozenset(self.terms.items())))

    # structure -----------------------------------------------------------

    def map_coefficients(self, func, new_field: Field) -> "MultiPoly":
        out = {}
        z = new_field.zero_rep
        for e, c in self.terms.items():
            r = func(c)
            if r != z:
                out[e] = r
        return MultiPoly(new_field, self.vars, out)

    def embed(self, new_field: Field) -> "MultiPoly":
        return self.map_coefficients(embedding(self.field, new_field), new_field)

    def extend_vars(self, new_vars) -> "MultiPoly":
        new_vars = tuple(new_vars)
        pos = {v: i for i, v in enumerate(new_vars)}
        idx = [pos[v] for v in self.vars]
        nv = len(new_vars)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nv
            for i, x in zip(idx, e):
                ne[i] = x
            out[tuple(ne)] = c
        return MultiPoly(self.field, new_vars, out)

    def permute_vars(self, perm: dict) -> "MultiPoly":
        """Relabel variables by the (bijective) name map perm."""
        new_names = tuple(perm.get(v, v) for v in self.vars)
        if sorted(new_names) != sorted(self.vars):
            raise VariableMismatch("relabeling must permute the variable set")
        idx = [new_names.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, x in zip(idx, e):
                ne[i] = x
            out[tuple(ne)] = c
        return MultiPoly(self.field, self.vars, out)

    def scale_variable(self, name: str, factor: Element) -> "MultiPoly":
        """Substitute name -> factor * name."""
        k = self.vars.index(name)
        fmul, z = self.field.mul, self.field.zero_rep
        pows: dict[int, object] = {0: self.field.one_rep}
        frep = self.field.elem(factor).rep
        out = {}
        for e, c in self.terms.items():
            d = e[k]
            if d not in pows:
                pows[d] = self.field.pow(frep, d)
            r = fmul(c, pows[d])
            if r != z:
                out[e] = r
        return MultiPoly(self.field, self.vars, out)

    def evaluate(self, point: dict) -> Element:
        """Evaluate at a point given as name -> Element; all variables
        must be bound.  Coefficients are embedded into the point field."""
        if not point and not self.vars:
            tgt = self.field
        else:
            tgt = next(iter(point.values())).field if point else self.field
        for v in self.vars:
            if v not in point:
                raise UnboundVariable(v)
        emb = embedding(self.field, tgt)
        # per-variable power tables
        maxes = [0] * len(self.vars)
        for e in self.terms:
            for i, x in enumerate(e):
                if x > maxes[i]:
                    maxes[i] = x
        tables = []
        for v, mx in zip(self.vars, maxes):
            rep = tgt.elem(point[v]).rep
            tab = [tgt.one_rep]
            for _ in range(mx):
                tab.append(tgt.mul(tab[-1], rep))
            tables.append(tab)
        acc = tgt.zero_rep
        for e, c in self.terms.items():
            term = emb(c)
            for i, x in enumerate(e):
                if x:
                    term = tgt.mul(term, tables[i][x])
            acc = tgt.add(acc, term)
        return Element(tgt, acc)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{x}" if x > 1 else v for v, x in zip(self.vars, e) if x
            )
            cs = self.field.fmt(c)
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """add / sub / mul on polynomials over the same field and variables."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise InvalidParameter(f"unknown op {op!r}")


def exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Quotient a/b when b divides a exactly; raises InvalidParameter
    otherwise.  Leading-term elimination under graded lex."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZeroRatFun("division by zero polynomial")
    field = a.field
    q = MultiPoly.zero(field, a.vars)
    r = a
    be, bc = b.leading()
    bc_inv = field.inv(bc)
    while not r.is_zero():
        re, rc = r.leading()
        de = tuple(x - y for x, y in zip(re, be))
        if any(x < 0 for x in de):
            raise InvalidParameter("inexact polynomial division")
        term = MultiPoly(field, a.vars, {de: field.mul(rc, bc_inv)})
        q = q + term
        r = r - term * b
    return q


# ---------------------------------------------------------------------------
# determinants

_COFACTOR_MAX_DIM = 5


def _cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    field, variables = rows[0][0].field, rows[0][0].vars
    # expand along the column with the fewest total terms
    col = min(range(n), key=lambda j: sum(len(rows[i][j].terms) for i in range(n)))
    det = MultiPoly.zero(field, variables)
    for i in range(n):
        entry = rows[i][col]
        if entry.is_zero():
            continue
        minor = [
            [rows[r][c] for c in range(n) if c != col] for r in range(n) if r != i
        ]
        sub = _cofactor_det(minor)
        if (i + col) % 2:
            sub = -sub
        det = det + entry * sub
    return det


def _bareiss_det(rows):
    n = len(rows)
    field, variables = rows[0][0].field, rows[0][0].vars
    m = [list(r) for r in rows]
    sign = 1
    prev = MultiPoly.constant(field, variables, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(field, variables)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sym_det(rows, method: str = "auto") -> MultiPoly:
    """Exact symbolic determinant.  Cofactor expansion for dimension <= 5,
    fraction-free Bareiss elimination above that."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare("matrix is not square")
    if n == 0:
        raise NotSquare("empty matrix")
    if method == "auto":
        method = "cofactor" if n <= _COFACTOR_MAX_DIM else "bareiss"
    if method == "cofactor":
        return _cofactor_det(rows)
    if method == "bareiss":
        return _bareiss_det(rows)
    raise InvalidParameter(f"unknown method {method!r}")


def elementary_symmetric(items, k: int) -> MultiPoly:
    """s_k of a list of polynomials, via the product recurrence
    prod_i (1 + items[i] u) tracked up to u^k."""
    items = list(items)
    if k < 0 or k > len(items):
        raise IndexOutOfRange(f"k={k} out of range for {len(items)} items")
    if not items:
        raise IndexOutOfRange("empty item list")
    field, variables = items[0].field, items[0].vars
    coeffs = [MultiPoly.constant(field, variables, 1)] + [
        MultiPoly.zero(field, variables) for _ in range(k)
    ]
    for it in items:
        for j in range(min(k, len(coeffs) - 1), 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * it
    return coeffs[k]


# ---------------------------------------------------------------------------
# rational functions


class RatFun:
    """num/den with den nonzero.  The denominator is kept monic under
    graded lex; common monomial factors of num and den are cancelled."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly, normalize: bool = True):
        if den.is_zero():
            raise DivisionByZeroRatFun("zero denominator")
        num._check(den)
        if normalize:
            num, den = _light_reduce(num, den)
            lc = den.leading()[1]
            if lc != den.field.one_rep:
                inv = Element(den.field, den.field.inv(lc))
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RatFun":
        return cls(p, MultiPoly.constant(p.field, p.vars, 1), normalize=False)

    @classmethod
    def const(cls, field, variables, c) -> "RatFun":
        return cls.from_poly(MultiPoly.constant(field, variables, c))

    @property
    def field(self):
        return self.num.field

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, MultiPoly):
            return RatFun.from_poly(other)
        if isinstance(other, (int, Element)):
            return RatFun.const(self.field, self.vars, other)
        raise InvalidParameter(f"cannot coerce {other!r} to RatFun")

    def __add__(self, other):
        other = self._coerce(other)
        if self.den.terms == other.den.terms:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise DivisionByZeroRatFun("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def scale(self, c: Element) -> "RatFun":
        return RatFun(self.num.scale(c), self.den)

    def equals(self, other) -> bool:
        return ratfun_equal(self, self._coerce(other))

    def embed(self, new_field: Field) -> "RatFun":
        return RatFun(self.num.embed(new_field), self.den.embed(new_field))

    def extend_vars(self, new_vars) -> "RatFun":
        return RatFun(
            self.num.extend_vars(new_vars), self.den.extend_vars(new_vars), normalize=False
        )

    def evaluate(self, point: dict) -> Element:
        dv = self.den.evaluate(point)
        if dv.is_zero():
            raise EvalDenominatorZero(f"denominator vanishes at {point}")
        return self.num.evaluate(point) / dv

    def __repr__(self):
        if self.den.is_constant():
            c = self.den.constant_value()
            return repr(self.num.scale(c.inverse())) if c != 1 else repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


def _light_reduce(num: MultiPoly, den: MultiPoly):
    """Cancel the largest monomial dividing both num and den."""
    if num.is_zero():
        return num, MultiPoly.constant(den.field, den.vars, 1)
    shift = tuple(min(a, b) for a, b in zip(_min_exps(num), _min_exps(den)))
    if not any(shift):
        return num, den
    return _shift_down(num, shift), _shift_down(den, shift)


def _min_exps(p: MultiPoly):
    it = iter(p.terms)
    first = next(it)
    mins = list(first)
    for e in it:
        for i, x in enumerate(e):
            if x < mins[i]:
                mins[i] = x
    return tuple(mins)


def _shift_down(p: MultiPoly, shift):
    return MultiPoly(
        p.field,
        p.vars,
        {tuple(x - s for x, s in zip(e, shift)): c for e, c in p.terms.items()},
    )


def ratfun_equal(a: RatFun, b: RatFun) -> bool:
    """Functional equality by cross multiplication (exact)."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.vars != b.vars:
        raise VariableMismatch(f"{a.vars} vs {b.vars}")
    if a.den.terms == b.den.terms:
        return a.num.terms == b.num.terms
    return a.num * b.den == b.num * a.den


def ratfun_arith(a: RatFun, b: RatFun, op: str) -> RatFun:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise InvalidParameter(f"unknown op {op!r}")


def substitute(f, bindings: dict):
    """Substitute variables of f (RatFun or MultiPoly) by field elements,
    polynomials or rational functions.

    When every variable is bound to an Element the result is an Element;
    otherwise a RatFun over the union of the remaining and the introduced
    variables.  A vanishing denominator under full evaluation raises
    EvalDenominatorZero.
    """
    if isinstance(f, MultiPoly):
        f = RatFun.from_poly(f)
    elems = {k: v for k, v in bindings.items() if isinstance(v, (int, Element))}
    if set(f.vars) <= set(bindings) and len(elems) == len(bindings):
        point = {k: f.field.elem(v) if isinstance(v, int) else v for k, v in elems.items()}
        return f.evaluate({v: point[v] for v in f.vars})
    # symbolic: assemble the result variable list
    out_vars = [v for v in f.vars if v not in bindings]
    for v in f.vars:
        if v in bindings:
            val = bindings[v]
            if isinstance(val, (MultiPoly, RatFun)):
                for w in val.vars:
                    if w not in out_vars:
                        out_vars.append(w)
    out_vars = tuple(out_vars)
    rfs = {}
    for v in f.vars:
        if v not in bindings:
            rfs[v] = RatFun.from_poly(MultiPoly.variable(f.field, out_vars, v))
            continue
        val = bindings[v]
        if isinstance(val, (int, Element)):
            rfs[v] = RatFun.const(f.field, out_vars, val)
        elif isinstance(val, MultiPoly):
            rfs[v] = RatFun.from_poly(val.extend_vars(out_vars))
        elif isinstance(val, RatFun):
            rfs[v] = val.extend_vars(out_vars)
        else:
            raise InvalidParameter(f"bad binding for {v}: {val!r}")
    num = _poly_substitute(f.num, rfs, out_vars)
    den = _poly_substitute(f.den, rfs, out_vars)
    if den.is_zero():
        raise EvalDenominatorZero("denominator vanished under substitution")
    return num / den


def _poly_substitute(p: MultiPoly, rfs: dict, out_vars) -> RatFun:
    acc = RatFun.const(p.field, out_vars, 0)
    pows: dict[tuple[str, int], RatFun] = {}

    def power(v, k):
        key = (v, k)
        if key not in pows:
            pows[key] = RatFun(rfs[v].num ** k, rfs[v].den ** k)
        return pows[key]

    for e, c in p.terms.items():
        term = RatFun.const(p.field, out_vars, Element(p.field, c))
        for v, x in zip(p.vars, e):
            if x:
                term = term * power(v, x)
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# membership in the power subfield


def power_subfield_root(field: Field, m: int):
    """(work field, eps, coefficient map) for testing invariance under
    X -> eps X: base-extends rationals to Q(eps_m) and prime fields to
    GF(p^e) with the minimal e such that m divides p^e - 1."""
    try:
        eps = primitive_root_of_unity(field, m)
        return field, eps, (lambda rep: rep)
    except NoSuchRoot:
        pass
    if isinstance(field, RationalField):
        work = CyclotomicField(m)
        return work, work.eps(), embedding(field, work)
    if isinstance(field, PrimeField):
        e = min_frobenius_exponent(field.p, m)
        work = ExtensionField(field.p, e)
        return work, primitive_root_of_unity(work, m), embedding(field, work)
    raise NoSuchRoot(f"cannot extend {field} by a primitive {m}th root of unity")


def is_in_power_subfield(f: RatFun, m: int, xvars=None) -> bool:
    """True iff f is fixed, as a function, by X_k -> eps X_k for every
    listed variable, eps a primitive m-th root of unity.  This is exactly
    membership in F(X_1^m, ..., X_n^m)."""
    if m <= 0:
        raise InvalidParameter("m must be positive")
    if m == 1:
        return True
    if xvars is None:
        xvars = f.vars
    work, eps, emb = power_subfield_root(f.field, m)
    if work != f.field:
        f = RatFun(f.num.map_coefficients(emb, work), f.den.map_coefficients(emb, work))
    for v in xvars:
        if v not in f.vars:
            raise UnboundVariable(v)
        num, den = f.num.scale_variable(v, eps), f.den.scale_variable(v, eps)
        # keep den's monomial support intact (monic-scale only) so that a
        # scalar-invariant denominator triggers the termwise comparison
        lc = den.leading()[1]
        if lc != den.field.one_rep:
            inv = Element(den.field, den.field.inv(lc))
            num, den = num.scale(inv), den.scale(inv)
        g = RatFun(num, den, normalize=False)
        if not ratfun_equal(f, g):
            return False
    return True


# ---------------------------------------------------------------------------
# polynomials in T with rational-function coefficients


class TPoly:
    """The reconstruction output: a polynomial in T whose coefficients are
    rational functions of the X variables.  Terms are stored sorted by
    strictly increasing exponent; zero coefficients are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [(t, c) for t, c in coeffs if not c.is_zero()]
        if any(t2 <= t1 for (t1, _), (t2, _) in zip(coeffs, coeffs[1:])):
            raise InvalidParameter("exponents must be strictly increasing")
        if any(t < 0 for t, _ in coeffs):
            raise InvalidParameter("exponents must be nonnegative")
        self.coeffs = coeffs

    @property
    def field(self):
        return self.coeffs[0][1].field

    @property
    def vars(self):
        return self.coeffs[0][1].vars

    def substitute_T(self, s: MultiPoly) -> RatFun:
        """The rational function obtained by T -> s."""
        acc = RatFun.const(s.field, s.vars, 0)
        for t, c in self.coeffs:
            acc = acc + c * RatFun.from_poly(s**t)
        return acc

    def as_ratfun(self, tvar: str = "T") -> RatFun:
        """f as a rational function in the X variables and a fresh T."""
        ext = self.vars + (tvar,)
        acc = RatFun.const(self.field, ext, 0)
        for t, c in self.coeffs:
            tpow = MultiPoly.monomial(self.field, ext, (0,) * len(self.vars) + (t,))
            acc = acc + c.extend_vars(ext) * RatFun.from_poly(tpow)
        return acc

    def evaluate(self, point: dict, tval: Element) -> Element:
        field = tval.field
        acc = field.zero()
        tp = {0: field.one()}
        for t, c in self.coeffs:
            if t not in tp:
                tp[t] = Element(field, field.pow(tval.rep, t))
            acc = acc + c.evaluate(point) * tp[t]
        return acc

    def map(self, func) -> "TPoly":
        return TPoly([(t, func(c)) for t, c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return [t for t, _ in self.coeffs] == [t for t, _ in other.coeffs] and all(
            ratfun_equal(a, b) for (_, a), (_, b) in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return " + ".join(f"({c!r})*T^{t}" if t else f"({c!r})" for t, c in self.coeffs)


def xvar_names(n: int) -> tuple[str, ...]:
    return tuple(f"X{i}" for i in range(1, n + 1))
