"""Reconstruction of X1 in characteristic p via Moore matrices.

Over GF(p) with p not dividing m, pick the least e with p^e = 1 (mod m)
and q = p^e.  The Moore determinant and its first-row minors give

    X1 = sum_i (-1)^i (X1 Delta_i / Delta) T^(q^i),

with every coefficient lying in F(X1^(q-1), ..., Xn^(q-1)), a subfield of
F(X1^m, ..., Xn^m).  The minors admit two further evaluations (normal
basis, minimal polynomial) used for cross-checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import (
    DegreeTooSmall,
    IndexOutOfRange,
    InvalidParameter,
    SingularMooreMatrix,
    TooLarge,
    VerificationFailed,
)
from .fields import (
    Element,
    ExtensionField,
    Field,
    PrimeField,
    frobenius,
    min_frobenius_exponent,
)
from .multipoly import (
    MultiPoly,
    RatFun,
    TPoly,
    is_in_power_subfield,
    sym_det,
    xvar_names,
)

_PRODUCT_GUARD = 10_000


@dataclass(frozen=True)
class MooreContext:
    p: int
    m: int
    n: int
    e: int
    q: int
    base: PrimeField = dc_field(compare=False)
    qfield: Field = dc_field(compare=False)
    big: Field = dc_field(compare=False)


def make_moore_context(p: int, m: int, n: int, e: int | None = None) -> MooreContext:
    if n < 1:
        raise InvalidParameter("n must be positive")
    if e is None or (m > 1 and pow(p, e, m) != 1):
        e = min_frobenius_exponent(p, m)
    q = p**e
    base = PrimeField(p)
    qfield = base if e == 1 else ExtensionField(p, e)
    big = base if e * n == 1 else ExtensionField(p, e * n)
    return MooreContext(p=p, m=m, n=n, e=e, q=q, base=base, qfield=qfield, big=big)


# ---------------------------------------------------------------------------
# Moore determinants


def moore_matrix(field: Field, q: int, n: int, variables=None):
    """Rows i = 0..n-1 of entries X_j^(q^i)."""
    if n < 1:
        raise InvalidParameter("n must be positive")
    if variables is None:
        variables = xvar_names(n)
    rows = []
    for i in range(n):
        qi = q**i
        rows.append(
            [
                MultiPoly.monomial(
                    field, variables, tuple(qi if k == j else 0 for k in range(len(variables)))
                )
                for j in range(n)
            ]
        )
    return rows


def moore_det_direct(field: Field, q: int, n: int) -> MultiPoly:
    return sym_det(moore_matrix(field, q, n))


def moore_det_product(field: Field, q: int, n: int) -> MultiPoly:
    """The factored Moore determinant: the product over i of
    (X_i + a_1 X_1 + ... + a_{i-1} X_{i-1}) for all a in GF(q)^(i-1);
    the i = 1 factor is X_1 itself."""
    if field.order != q:
        raise InvalidParameter(f"field order {field.order} != q = {q}")
    if q ** (n - 1) > _PRODUCT_GUARD:
        raise TooLarge(f"q^(n-1) = {q**(n-1)} exceeds {_PRODUCT_GUARD}")
    variables = xvar_names(n)
    xs = [MultiPoly.variable(field, variables, v) for v in variables]
    det = MultiPoly.constant(field, variables, 1)
    for i in range(1, n + 1):
        for avec in itertools.product(field.elements(), repeat=i - 1):
            factor = xs[i - 1]
            for a, x in zip(avec, xs):
                if not a.is_zero():
                    factor = factor + x.scale(a)
            det = det * factor
    return det


def moore_det_mixed(field: Field, q: int, args, variables) -> MultiPoly:
    """Moore determinant whose arguments are field constants or variable
    names; entry (i, j) is args[j]^(q^i)."""
    n = len(args)
    rows = []
    for i in range(n):
        qi = q**i
        row = []
        for a in args:
            if isinstance(a, Element):
                row.append(MultiPoly.constant(field, variables, a ** qi))
            else:
                exps = tuple(qi if v == a else 0 for v in variables)
                row.append(MultiPoly.monomial(field, variables, exps))
        rows.append(row)
    return sym_det(rows)


def const_moore_det(field: Field, q: int, elems) -> Element:
    """Moore determinant of constants; the empty determinant is 1."""
    n = len(elems)
    if n == 0:
        return field.one()
    rows = [[e ** (q**i) for e in elems] for i in range(n)]
    return element_det(rows)


def element_det(rows) -> Element:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    field = rows[0][0].field
    det = field.zero()
    for i in range(n):
        if rows[i][0].is_zero():
            continue
        minor = [[rows[r][c] for c in range(1, n)] for r in range(n) if r != i]
        sub = rows[i][0] * element_det(minor)
        det = det - sub if i % 2 else det + sub
    return det


def delta_i_direct(field: Field, q: int, n: int, i: int) -> MultiPoly:
    """The minor over X_2..X_n with Frobenius row q^i omitted.  For n = 1
    this is the empty determinant, 1."""
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"i={i} outside [0, {n - 1}]")
    variables = xvar_names(n)[1:]
    if n == 1:
        return MultiPoly.constant(field, variables, 1)
    rows = []
    for r in range(n):
        if r == i:
            continue
        qr = q**r
        rows.append(
            [
                MultiPoly.monomial(field, variables, tuple(qr if k == j else 0 for k in range(n - 1)))
                for j in range(n - 1)
            ]
        )
    return sym_det(rows)


# ---------------------------------------------------------------------------
# the reconstruction


def reconstruct_charp(ctx: MooreContext, check: bool = True) -> TPoly:
    """Coefficients c_(q^i) = (-1)^i X1 Delta_i / Delta over GF(p)."""
    field, q, n = ctx.base, ctx.q, ctx.n
    variables = xvar_names(n)
    delta = moore_det_direct(field, q, n)
    x1 = MultiPoly.variable(field, variables, "X1")
    coeffs = []
    for i in range(n):
        di = delta_i_direct(field, q, n, i).extend_vars(variables)
        num = x1 * di
        if i % 2:
            num = -num
        coeffs.append((q**i, RatFun(num, delta)))
    coeffs.sort(key=lambda tc: tc[0])
    f = TPoly(coeffs)
    if check:
        _check_charp(ctx, f, delta)
    return f


def _check_charp(ctx: MooreContext, f: TPoly, delta: MultiPoly):
    variables = xvar_names(ctx.n)
    field = ctx.base
    for _, c in f.coeffs:
        if not is_in_power_subfield(c, ctx.q - 1):
            raise VerificationFailed("coefficient not in F(X^(q-1)) subfield")
    s = MultiPoly.zero(field, variables)
    for v in variables:
        s = s + MultiPoly.variable(field, variables, v)
    x1 = MultiPoly.variable(field, variables, "X1")
    if not f.substitute_T(s).equals(RatFun.from_poly(x1)):
        raise VerificationFailed("T -> X1+...+Xn does not recover X1")


# ---------------------------------------------------------------------------
# appendix computations of Delta_i


def circulant_matrix(ctx: MooreContext, z: Element):
    """The n x n matrix of Frobenius powers with (i, j) entry z^(q^((i+j) mod n))."""
    n, q = ctx.n, ctx.q
    conj = [z]
    for _ in range(n - 1):
        conj.append(frobenius(conj[-1], q))
    return [[conj[(i + j) % n] for j in range(n)] for i in range(n)]


def normal_basis_find(ctx: MooreContext) -> Element:
    """First z in enumeration order whose conjugates form a normal basis,
    i.e. det M(z) != 0."""
    for z in ctx.big.elements():
        if z.is_zero():
            continue
        if not element_det(circulant_matrix(ctx, z)).is_zero():
            return z
    raise SingularMooreMatrix("no normal basis element found")  # pragma: no cover


def dual_element_w(ctx: MooreContext, z: Element) -> Element:
    """w with M(z)^(-1) = M(w): the (n-1)-argument Moore determinant of the
    conjugates of z, raised to q^2, divided by det M(z)."""
    q, n = ctx.q, ctx.n
    det = element_det(circulant_matrix(ctx, z))
    if det.is_zero():
        raise SingularMooreMatrix("det M(z) = 0")
    conj = [z]
    for _ in range(n - 2):
        conj.append(frobenius(conj[-1], q))
    num = const_moore_det(ctx.big, q, conj[: n - 1]) ** (q**2)
    w = num / det
    # M(w) M(z) = I
    mw = circulant_matrix(ctx, w)
    mz = circulant_matrix(ctx, z)
    for i in range(n):
        for j in range(n):
            s = ctx.big.zero()
            for k in range(n):
                s = s + mw[i][k] * mz[k][j]
            if s != (ctx.big.one() if i == j else ctx.big.zero()):
                raise VerificationFailed("M(w) M(z) != I")
    return w


def delta_i_normal_basis(ctx: MooreContext, i: int, z: Element) -> MultiPoly:
    """Delta_i as (-1)^i sum_k w^(q^(i+k)) Delta(z^(q^k), X2, ..., Xn)
    over GF(q^n)."""
    n, q = ctx.n, ctx.q
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"i={i} outside [0, {n - 1}]")
    variables = xvar_names(n)[1:]
    if n == 1:
        return MultiPoly.constant(ctx.big, variables, 1)
    w = dual_element_w(ctx, z)
    acc = MultiPoly.zero(ctx.big, variables)
    zk = z
    for k in range(n):
        wexp = w ** (q ** ((i + k) % n))
        det = moore_det_mixed(ctx.big, q, [zk] + list(variables), variables)
        acc = acc + det.scale(wexp)
        zk = frobenius(zk, q)
    return -acc if i % 2 else acc


def element_degree(ctx: MooreContext, alpha: Element) -> int:
    """Degree of alpha over GF(q)."""
    q = ctx.q
    a = frobenius(alpha, q)
    d = 1
    while a != alpha:
        a = frobenius(a, q)
        d += 1
    return d


def default_alpha(ctx: MooreContext) -> Element:
    """The canonical generator of GF(q^n) when it has degree n over GF(q)
    (always, for n > 1); deterministic scan otherwise."""
    if ctx.n == 1:
        return ctx.big.one()
    if isinstance(ctx.big, ExtensionField):
        g = ctx.big.gen()
        if element_degree(ctx, g) == ctx.n:
            return g
    for a in ctx.big.elements():
        if not a.is_zero() and element_degree(ctx, a) == ctx.n:
            return a
    raise DegreeTooSmall("no element of full degree")  # pragma: no cover


def min_poly_coeffs_a_k(ctx: MooreContext, alpha: Element):
    """The coefficients a_0..a_{n-1} of the interpolation polynomial g with
    g(alpha^(q^i)) = delta_i0, from the minimal polynomial of alpha."""
    n, q = ctx.n, ctx.q
    big = ctx.big
    if element_degree(ctx, alpha) != n:
        raise DegreeTooSmall(f"alpha has degree {element_degree(ctx, alpha)} < n = {n}")
    conj = [alpha]
    for _ in range(n - 1):
        conj.append(frobenius(conj[-1], q))
    # minimal polynomial f = prod (X - conj_i), coefficients b_0..b_n ascending
    b = [big.one()]
    for r in conj:
        b = [big.zero()] + b
        for j in range(len(b) - 1):
            b[j] = b[j] - b[j + 1] * r
    if ctx.n > 1 and isinstance(big, ExtensionField):
        for c in b:
            if frobenius(c, q) != c:
                raise VerificationFailed("minimal polynomial not over GF(q)")
    # f'(alpha)
    fprime = big.zero()
    for j in range(1, n + 1):
        fprime = fprime + big.elem(j) * b[j] * alpha ** (j - 1)
    a_inv = alpha.inverse()
    out = []
    for k in range(n):
        s = big.zero()
        for j in range(k + 1):
            s = s + a_inv ** (k + 1 - j) * b[j]
        out.append(-s / fprime)
    # defining property g(alpha_i) = delta_i0
    for i, r in enumerate(conj):
        g = big.zero()
        for k in range(n):
            g = g + out[k] * r**k
        if g != (big.one() if i == 0 else big.zero()):
            raise VerificationFailed("g(alpha_i) != delta_i0")
    return out


def delta_i_minpoly(ctx: MooreContext, i: int, alpha: Element, substituted: bool = False) -> MultiPoly:
    """Delta_i as (-1)^i sum_k alpha^(k q^i) Delta(a_k, X2, ..., Xn).

    With substituted=True, uses the expanded form with the minimal
    polynomial coefficients b_j in place of the a_k.
    """
    n, q = ctx.n, ctx.q
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"i={i} outside [0, {n - 1}]")
    variables = xvar_names(n)[1:]
    big = ctx.big
    if n == 1:
        return MultiPoly.constant(big, variables, 1)
    if element_degree(ctx, alpha) != n:
        raise DegreeTooSmall("alpha must have degree n over GF(q)")
    acc = MultiPoly.zero(big, variables)
    if not substituted:
        aks = min_poly_coeffs_a_k(ctx, alpha)
        for k in range(n):
            coef = alpha ** (k * q**i % (big.order - 1))
            det = moore_det_mixed(big, q, [aks[k]] + list(variables), variables)
            acc = acc + det.scale(coef)
        return -acc if i % 2 else acc
    # substituted form: coefficients from the minimal polynomial directly
    conj = [alpha]
    for _ in range(n - 1):
        conj.append(frobenius(conj[-1], q))
    b = [big.one()]
    for r in conj:
        b = [big.zero()] + b
        for j in range(len(b) - 1):
            b[j] = b[j] - b[j + 1] * r
    fprime = big.zero()
    for j in range(1, n + 1):
        fprime = fprime + big.elem(j) * b[j] * alpha ** (j - 1)
    a_inv = alpha.inverse()
    for k in range(n):
        outer = alpha ** (k * q**i % (big.order - 1))
        for j in range(k + 1):
            det = moore_det_mixed(
                big, q, [a_inv ** (k + 1 - j) / fprime] + list(variables), variables
            )
            acc = acc + det.scale(outer * b[j])
    # pulling -1/f'(alpha) out of the Moore column contributes one global
    # sign on top of (-1)^i
    if (i + 1) % 2:
        acc = -acc
    return acc
