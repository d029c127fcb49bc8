"""The general reconstruction over any coefficient field with char not
dividing m.

T^t expands as sum_lambda a(t, lambda) X^lambda over the index set
Lambda = {0..m-1}^n.  With eps a primitive m-th root of unity and nodes
b_j = sum_k eps^(j_k) X_k, the coefficient matrix factors through a
Vandermonde matrix in the b_j and a character matrix, both explicitly
invertible, giving

    X1 = sum_t ( X1 sum_j eps^(j_1) a_jt ) T^t,   0 <= t < m^n,

with every T-coefficient invariant under X_k -> eps X_k.  Also here: the
small-n elimination formulas for m = 2 and the minimal polynomial of T.
"""

from __future__ import annotations

import itertools
from math import factorial

from .errors import (
    CharDividesM,
    DuplicateNodes,
    IndexOutOfRange,
    InvalidParameter,
    TooLarge,
    Unsupported,
    VerificationFailed,
)
from .fields import (
    CyclotomicField,
    Element,
    ExtensionField,
    Field,
    PrimeField,
    RationalField,
    min_frobenius_exponent,
    primitive_root_of_unity,
)
from .multipoly import (
    MultiPoly,
    RatFun,
    TPoly,
    is_in_power_subfield,
    ratfun_equal,
    xvar_names,
)

DEFAULT_BOUND = 64


def lambda_indices(m: int, n: int):
    """Lambda = {0..m-1}^n in lexicographic order."""
    return list(itertools.product(range(m), repeat=n))


def pairing(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


class GeneralContext:
    """m, n, a work field containing a primitive m-th root of unity eps,
    and the m^n Vandermonde nodes b_j."""

    def __init__(self, m: int, n: int, field: Field):
        if m < 1 or n < 1:
            raise InvalidParameter("m and n must be positive")
        if field.char and m % field.char == 0:
            raise CharDividesM(f"characteristic {field.char} divides m={m}")
        work, eps = _work_field(field, m)
        self.m = m
        self.n = n
        self.base = field
        self.field = work
        self.eps = eps
        self.vars = xvar_names(n)
        self.lam = lambda_indices(m, n)
        self.eps_pows = [eps**k for k in range(m)]
        xs = [MultiPoly.variable(work, self.vars, v) for v in self.vars]
        self.nodes = []
        for j in self.lam:
            node = MultiPoly.zero(work, self.vars)
            for jk, x in zip(j, xs):
                node = node + x.scale(self.eps_pows[jk])
            self.nodes.append(node)
        self._node_pows: dict[tuple[int, int], MultiPoly] = {}
        self._lagrange = None

    def node_power(self, j: int, t: int) -> MultiPoly:
        key = (j, t)
        if key not in self._node_pows:
            self._node_pows[key] = self.nodes[j] ** t
        return self._node_pows[key]


def _work_field(field: Field, m: int):
    """Field actually used for coefficients: the given one when it already
    contains a primitive m-th root of unity, else the canonical extension
    (Q(eps_m) over the rationals, GF(p^e) with minimal e over char p)."""
    if m <= 2 or isinstance(field, CyclotomicField):
        if isinstance(field, CyclotomicField) and field.m % m != 0 and m > 2:
            field = CyclotomicField(m)
        return field, primitive_root_of_unity(field, m)
    if isinstance(field, RationalField):
        work = CyclotomicField(m)
        return work, work.eps()
    q = field.order
    if q is not None and (q - 1) % m == 0:
        return field, primitive_root_of_unity(field, m)
    p = field.char
    e = min_frobenius_exponent(p, m)
    work = ExtensionField(p, e) if e > 1 else PrimeField(p)
    return work, primitive_root_of_unity(work, m)


# ---------------------------------------------------------------------------
# the coefficients a(t, lambda)


def _compositions(t: int, n: int):
    if n == 1:
        yield (t,)
        return
    for head in range(t + 1):
        for rest in _compositions(t - head, n - 1):
            yield (head,) + rest


def a_coeff_multinomial(ctx: GeneralContext, t: int, lam) -> RatFun:
    """a(t, lambda) from the multinomial expansion of T^t: keep terms with
    exponents congruent to lambda mod m, divide by X^lambda."""
    _check_t_lam(ctx, t, lam)
    field = ctx.field
    terms = {}
    for comp in _compositions(t, ctx.n):
        if any((i - l) % ctx.m for i, l in zip(comp, lam)):
            continue
        coef = factorial(t)
        for i in comp:
            coef //= factorial(i)
        exps = tuple(i - l for i, l in zip(comp, lam))
        rep = field.from_int(coef)
        if rep != field.zero_rep:
            terms[exps] = rep
    return RatFun.from_poly(MultiPoly(field, ctx.vars, terms))


def a_coeff_character(ctx: GeneralContext, t: int, lam) -> RatFun:
    """a(t, lambda) from character orthogonality:
    m^-n X^-lambda sum_j eps^(-<lambda, j>) b_j^t."""
    _check_t_lam(ctx, t, lam)
    field = ctx.field
    acc = MultiPoly.zero(field, ctx.vars)
    for jidx, j in enumerate(ctx.lam):
        chi = ctx.eps_pows[(-pairing(lam, j)) % ctx.m]
        acc = acc + ctx.node_power(jidx, t).scale(chi)
    scale = field.elem(ctx.m**ctx.n).inverse()
    den = MultiPoly.monomial(field, ctx.vars, lam)
    return RatFun(acc.scale(scale), den)


def _check_t_lam(ctx: GeneralContext, t: int, lam):
    if not 0 <= t <= ctx.m**ctx.n - 1:
        raise IndexOutOfRange(f"t={t} outside [0, {ctx.m**ctx.n - 1}]")
    if tuple(lam) not in set(ctx.lam):
        raise IndexOutOfRange(f"lambda={lam} not in Lambda")


# ---------------------------------------------------------------------------
# Vandermonde data


def vandermonde_nodes(ctx: GeneralContext):
    return list(ctx.nodes)


def _resolve_j(ctx: GeneralContext, j) -> int:
    if isinstance(j, int):
        if not 0 <= j < len(ctx.lam):
            raise IndexOutOfRange(f"node index {j}")
        return j
    try:
        return ctx.lam.index(tuple(j))
    except ValueError:
        raise IndexOutOfRange(f"node index {j}") from None


def _lagrange_data(ctx: GeneralContext):
    """Per node j: the numerator coefficients ell_j of prod_{i != j}(X - b_i),
    the denominator d_j = prod_{i != j}(b_j - b_i), the pair-product
    V = prod_{i < i'}(b_i - b_i'), its j-omitting version V_j, and the
    sign making d_j * sign_j * V_j = V."""
    if ctx._lagrange is not None:
        return ctx._lagrange
    field, variables = ctx.field, ctx.vars
    nodes = ctx.nodes
    N = len(nodes)
    one = MultiPoly.constant(field, variables, 1)
    V = one
    for a in range(N):
        for b in range(a + 1, N):
            V = V * (nodes[a] - nodes[b])
    ells, ds, vjs, signs = [], [], [], []
    for j in range(N):
        ell = [one]
        for i in range(N):
            if i == j:
                continue
            ell = [MultiPoly.zero(field, variables)] + ell
            # multiply by (X - b_i): new[k] = old[k-1] - b_i old[k]
            for k in range(len(ell) - 1):
                ell[k] = ell[k] - nodes[i] * ell[k + 1]
        d = one
        for i in range(N):
            if i != j:
                diff = nodes[j] - nodes[i]
                if diff.is_zero():
                    raise DuplicateNodes(f"nodes {j} and {i} coincide")
                d = d * diff
        vj = one
        for a in range(N):
            for b in range(a + 1, N):
                if a != j and b != j:
                    vj = vj * (nodes[a] - nodes[b])
        ells.append(ell)
        ds.append(d)
        vjs.append(vj)
        signs.append(-1 if j % 2 else 1)
    ctx._lagrange = (ells, ds, V, vjs, signs)
    return ctx._lagrange


def vandermonde_inverse_row(ctx: GeneralContext, j):
    """Row j of the inverse Vandermonde matrix: a_jt is the coefficient of
    X^t in prod_{i != j}(X - b_i) / prod_{i != j}(b_j - b_i)."""
    jj = _resolve_j(ctx, j)
    ells, ds, _, _, _ = _lagrange_data(ctx)
    return [RatFun(num, ds[jj]) for num in ells[jj]]


def _monic_ratfun(num: MultiPoly, den: MultiPoly) -> RatFun:
    """num/den with den made monic but no monomial cancellation, so a
    family built over one den shares it verbatim."""
    lc = den.leading()[1]
    if lc != den.field.one_rep:
        inv = Element(den.field, den.field.inv(lc))
        num, den = num.scale(inv), den.scale(inv)
    return RatFun(num, den, normalize=False)


# ---------------------------------------------------------------------------
# reconstruction


def reconstruct_general(ctx: GeneralContext, check: bool = True, bound: int = DEFAULT_BOUND) -> TPoly:
    """X1 as a polynomial in T of degree < m^n with coefficients
    c_t = X1 sum_j eps^(j_1) a_jt, all sharing the denominator
    V = prod_{i<i'}(b_i - b_i')."""
    N = ctx.m**ctx.n
    if N > bound:
        raise TooLarge(f"m^n = {N} exceeds bound {bound}")
    field, variables = ctx.field, ctx.vars
    ells, ds, V, vjs, signs = _lagrange_data(ctx)
    if check:
        # the factored inverse is exact: d_j * sign_j * V_j = V for all j
        for j in range(N):
            prod = ds[j] * vjs[j]
            if signs[j] < 0:
                prod = -prod
            if prod != V:
                raise VerificationFailed("Vandermonde cofactor identity failed")
    x1 = MultiPoly.variable(field, variables, "X1")
    nums = []
    for t in range(N):
        acc = MultiPoly.zero(field, variables)
        for j in range(N):
            w = ctx.eps_pows[ctx.lam[j][0]]
            if signs[j] < 0:
                w = -w
            acc = acc + (ells[j][t] * vjs[j]).scale(w)
        nums.append(x1 * acc)
    coeffs = [
        (t, _monic_ratfun(num, V)) for t, num in enumerate(nums) if not num.is_zero()
    ]
    f = TPoly(coeffs)
    if check:
        _check_general(ctx, f, nums, V)
    # re-normalize for output: the shared-denominator form was only needed
    # to make the checks cheap
    return TPoly([(t, RatFun(c.num, c.den)) for t, c in f.coeffs])


def _check_general(ctx: GeneralContext, f: TPoly, nums, V: MultiPoly):
    for _, c in f.coeffs:
        if not is_in_power_subfield(c, ctx.m, ctx.vars):
            raise VerificationFailed("coefficient not in F(X^m) subfield")
    # T -> X1 + ... + Xn must give back X1; over the common denominator V
    # this is sum_t num_t s^t = X1 V as polynomials
    s = MultiPoly.zero(ctx.field, ctx.vars)
    for v in ctx.vars:
        s = s + MultiPoly.variable(ctx.field, ctx.vars, v)
    acc = MultiPoly.zero(ctx.field, ctx.vars)
    spow = MultiPoly.constant(ctx.field, ctx.vars, 1)
    for t, num in enumerate(nums):
        if t:
            spow = spow * s
        if not num.is_zero():
            acc = acc + num * spow
    x1 = MultiPoly.variable(ctx.field, ctx.vars, "X1")
    if acc != x1 * V:
        raise VerificationFailed("T -> X1+...+Xn does not recover X1")


def transpose_to(f: TPoly, i: int, verify: bool = True) -> TPoly:
    """Swap X1 and Xi in every coefficient; the result reconstructs Xi."""
    variables = f.vars
    n = len(variables)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i={i} outside [1, {n}]")
    if i == 1:
        return f
    perm = {"X1": f"X{i}", f"X{i}": "X1"}
    out = TPoly(
        [
            (t, RatFun(c.num.permute_vars(perm), c.den.permute_vars(perm)))
            for t, c in f.coeffs
        ]
    )
    if verify:
        field = f.field
        s = MultiPoly.zero(field, variables)
        for v in variables:
            s = s + MultiPoly.variable(field, variables, v)
        xi = RatFun.from_poly(MultiPoly.variable(field, variables, f"X{i}"))
        if not ratfun_equal(out.substitute_T(s), xi):
            raise VerificationFailed(f"transposed polynomial does not recover X{i}")
    return out


# ---------------------------------------------------------------------------
# Galois invariance of the coefficients (rational base only)


def _eps_conjugator(field: CyclotomicField, k: int):
    """The field map determined by eps -> eps^k, gcd(k, m) = 1, acting on
    representations."""
    ek = field.eps() ** k
    pows = [field.one()]
    for _ in range(field.deg - 1):
        pows.append(pows[-1] * ek)

    def conj(rep):
        acc = field.zero_rep
        for c, p in zip(rep, pows):
            term = tuple(x * c for x in p.rep)
            acc = tuple(a + b for a, b in zip(acc, term))
        return acc

    return conj


def rational_coefficient_mask(ctx: GeneralContext, f: TPoly):
    """For each T-coefficient, whether it is fixed by every eps -> eps^k
    with gcd(k, m) = 1, i.e. already defined over the rational base.  Only
    meaningful when the work field is Q(eps_m); otherwise all True."""
    if not isinstance(ctx.field, CyclotomicField):
        return [True for _ in f.coeffs]
    from math import gcd

    units = [k for k in range(2, ctx.m) if gcd(k, ctx.m) == 1]
    mask = []
    for _, c in f.coeffs:
        ok = True
        for k in units:
            conj = _eps_conjugator(ctx.field, k)
            num = c.num.map_coefficients(conj, ctx.field)
            den = c.den.map_coefficients(conj, ctx.field)
            if not ratfun_equal(c, RatFun(num, den)):
                ok = False
                break
        mask.append(ok)
    return mask


# ---------------------------------------------------------------------------
# naive elimination (m = 2, n <= 4)

_NAIVE_MAX_ROUNDS = 6


def naive_formula(n: int, field: Field | None = None) -> RatFun:
    """The closed forms for m = 2 obtained by repeated squaring and
    isolation of X1, replayed symbolically; works only up to n = 4."""
    if field is None:
        field = RationalField()
    if field.char == 2:
        raise CharDividesM("the m = 2 elimination needs characteristic != 2")
    if n < 1:
        raise InvalidParameter("n must be positive")
    if n > 4:
        raise Unsupported("the elimination method fails for n >= 5")
    variables = xvar_names(n) + ("T",)
    T = MultiPoly.variable(field, variables, "T")
    xs = [MultiPoly.variable(field, variables, v) for v in xvar_names(n)]
    if n == 1:
        return RatFun.from_poly(T)
    k = n // 2
    left = T
    for x in xs[:k]:
        left = left - x
    right = MultiPoly.zero(field, variables)
    for x in xs[k:]:
        right = right + x
    P = left * left - right * right

    def split(poly):
        good, bad = {}, {}
        for e, c in poly.terms.items():
            # e = (e_1, ..., e_n, e_T); "good" means X2..Xn appear evenly
            (good if all(x % 2 == 0 for x in e[1:n]) else bad)[e] = c
        return (
            MultiPoly(field, variables, good),
            MultiPoly(field, variables, bad),
        )

    for _ in range(_NAIVE_MAX_ROUNDS):
        good, bad = split(P)
        if bad.is_zero():
            odd = {e: c for e, c in good.terms.items() if e[0] % 2}
            even = {e: c for e, c in good.terms.items() if e[0] % 2 == 0}
            a = MultiPoly(
                field, variables, {(e[0] - 1,) + e[1:]: c for e, c in odd.items()}
            )
            e_part = MultiPoly(field, variables, even)
            if a.is_zero():
                raise Unsupported("elimination produced no X1-linear part")
            return RatFun(-e_part, a)
        # good = -bad on the solution set; square both sides
        P = good * good - bad * bad
    raise Unsupported("elimination did not terminate")  # pragma: no cover


# ---------------------------------------------------------------------------
# minimal polynomial of T


def minimal_poly_of_T(ctx: GeneralContext, check: bool = True, bound: int = DEFAULT_BOUND):
    """Coefficients (ascending, length m^n + 1) of
    prod_{a in Lambda} (X - sum_i eps^(a_i) X_i), each a polynomial in the
    X variables lying in F(X^m)."""
    N = ctx.m**ctx.n
    if N > bound:
        raise TooLarge(f"m^n = {N} exceeds bound {bound}")
    field, variables = ctx.field, ctx.vars
    coeffs = [MultiPoly.constant(field, variables, 1)]
    for node in ctx.nodes:
        coeffs = [MultiPoly.zero(field, variables)] + coeffs
        for kk in range(len(coeffs) - 1):
            coeffs[kk] = coeffs[kk] - node * coeffs[kk + 1]
    if check:
        if len(coeffs) != N + 1 or coeffs[-1] != MultiPoly.constant(field, variables, 1):
            raise VerificationFailed("minimal polynomial degree mismatch")
        for c in coeffs[:-1]:
            if not c.is_zero() and not is_in_power_subfield(
                RatFun.from_poly(c), ctx.m, ctx.vars
            ):
                raise VerificationFailed("minimal polynomial coefficient not in F(X^m)")
        s = MultiPoly.zero(field, variables)
        for v in variables:
            s = s + MultiPoly.variable(field, variables, v)
        acc = MultiPoly.zero(field, variables)
        for kk, c in enumerate(coeffs):
            acc = acc + c * s**kk
        if not acc.is_zero():
            raise VerificationFailed("minimal polynomial does not annihilate T")
    return coeffs
