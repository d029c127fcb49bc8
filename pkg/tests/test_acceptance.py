"""Acceptance gate: one test per criterion, each printing a single
pass/fail line and enforcing its runtime budget."""

import time

import pytest

from radext.charp import (
    default_alpha,
    delta_i_direct,
    delta_i_minpoly,
    delta_i_normal_basis,
    make_moore_context,
    moore_det_direct,
    moore_det_product,
    normal_basis_find,
    reconstruct_charp,
)
from radext.errors import CharDividesM
from radext.fields import ExtensionField, PrimeField, RationalField
from radext.general import (
    GeneralContext,
    a_coeff_character,
    a_coeff_multinomial,
    minimal_poly_of_T,
    naive_formula,
    reconstruct_general,
    vandermonde_inverse_row,
    vandermonde_nodes,
)
from radext.multipoly import (
    MultiPoly,
    RatFun,
    TPoly,
    exact_div,
    is_in_power_subfield,
    ratfun_equal,
)
from radext.verify import TrialPlan, verify_reconstruction
from radext import cli

Q = RationalField()


class Budget:
    def __init__(self, number, name, seconds):
        self.number, self.name, self.seconds = number, name, seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        ok = exc_type is None and elapsed < self.seconds
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] criterion {self.number}: {self.name} ({elapsed:.2f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, f"budget {self.seconds}s exceeded: {elapsed:.2f}s"
        return False


def sum_of_vars(field, variables):
    s = MultiPoly.zero(field, variables)
    for v in variables:
        s = s + MultiPoly.variable(field, variables, v)
    return s


def x1_ratfun(field, variables):
    return RatFun.from_poly(MultiPoly.variable(field, variables, "X1"))


def free_t_agree(tp: TPoly, closed: RatFun, ctx: GeneralContext) -> bool:
    """Free-T functional comparison modulo the defining relation of T: the
    cross-multiplied difference must be divisible by the minimal polynomial
    of T over F(X^m)."""
    diff = tp.as_ratfun() - closed
    if diff.num.is_zero():
        return True
    mp = minimal_poly_of_T(ctx, check=False)
    ext = diff.num.vars
    tvar = MultiPoly.variable(ctx.field, ext, "T")
    poly = MultiPoly.zero(ctx.field, ext)
    for k, c in enumerate(mp):
        poly = poly + c.extend_vars(ext) * tvar**k
    try:
        exact_div(diff.num, poly)
        return True
    except Exception:
        return False


def test_criterion_01_golden_closed_forms():
    with Budget(1, "golden closed forms (n = 2, 3)", 20):
        for n in (2, 3):
            t0 = time.monotonic()
            ctx = GeneralContext(2, n, Q)
            f = reconstruct_general(ctx)
            variables = ctx.vars
            s = sum_of_vars(Q, variables)
            assert ratfun_equal(f.substitute_T(s), x1_ratfun(Q, variables))
            closed = naive_formula(n)  # the small-n closed forms
            assert free_t_agree(f, closed, ctx)
            assert time.monotonic() - t0 < 10


CASES_2 = [(2, 2), (2, 3), (3, 2)]


def _general_contexts(m, n):
    yield GeneralContext(m, n, Q)  # runs over Q or Q(eps_m)
    # minimal prime power q = 1 (mod m): q = 3 for m = 2, q = 4 for m = 3
    base = PrimeField(3) if m == 2 else ExtensionField(2, 2)
    yield GeneralContext(m, n, base)


def test_criterion_02_symbolic_reconstruction_identity():
    with Budget(2, "symbolic reconstruction identity", 180):
        for m, n in CASES_2:
            for ctx in _general_contexts(m, n):
                t0 = time.monotonic()
                f = reconstruct_general(ctx, check=False)
                s = sum_of_vars(ctx.field, ctx.vars)
                assert ratfun_equal(f.substitute_T(s), x1_ratfun(ctx.field, ctx.vars))
                assert time.monotonic() - t0 < 60


def test_criterion_03_coefficient_membership():
    with Budget(3, "coefficient membership in F(X^m)", 90):
        for m, n in CASES_2:
            t0 = time.monotonic()
            ctx = GeneralContext(m, n, Q)
            for _, c in reconstruct_general(ctx, check=False).coeffs:
                assert is_in_power_subfield(c, m, ctx.vars)
            assert time.monotonic() - t0 < 30
        # char-p path: coefficients lie in F(X^(q-1))
        t0 = time.monotonic()
        mctx = make_moore_context(3, 2, 2)
        for _, c in reconstruct_charp(mctx, check=False).coeffs:
            assert is_in_power_subfield(c, mctx.q - 1)
        assert time.monotonic() - t0 < 30


def test_criterion_04_charp_evaluations():
    with Budget(4, "char-p reconstruction at 100 random points", 90):
        for p, m in [(3, 2), (2, 3), (5, 2)]:
            for n in (1, 2, 3):
                t0 = time.monotonic()
                ctx = make_moore_context(p, m, n)
                f = reconstruct_charp(ctx, check=False)
                plan = TrialPlan(ctx.big, 100, seed=1)
                verdict = verify_reconstruction(f, plan)
                assert verdict.passed, (p, m, n)
                assert time.monotonic() - t0 < 30


def test_criterion_05_moore_determinant_two_ways():
    with Budget(5, "Moore determinant product vs direct", 30):
        for q, n in [(2, 2), (2, 3), (3, 2), (4, 2), (5, 2), (3, 3)]:
            p = 2 if q in (2, 4) else 3 if q in (3, 9) else 5
            e = {2: 1, 3: 1, 4: 2, 5: 1}[q]
            F = PrimeField(p) if e == 1 else ExtensionField(p, e)
            assert moore_det_product(F, q, n) == moore_det_direct(F, q, n)


def test_criterion_06_delta_three_ways():
    with Budget(6, "Delta_i three-way agreement", 60):
        for q, n in [(2, 2), (3, 2), (2, 3), (4, 2)]:
            p, e = (2, 1) if q == 2 else (3, 1) if q == 3 else (2, 2)
            ctx = make_moore_context(p, max(q - 1, 1), n, e)
            z = normal_basis_find(ctx)
            alpha = default_alpha(ctx)
            for i in range(n):
                direct = delta_i_direct(ctx.big, q, n, i)
                assert delta_i_normal_basis(ctx, i, z) == direct
                assert delta_i_minpoly(ctx, i, alpha) == direct


def test_criterion_07_a_coefficients_two_ways():
    with Budget(7, "a(t, lambda) multinomial vs character", 120):
        for m, n in [(2, 2), (3, 2), (2, 3)]:
            ctx = GeneralContext(m, n, Q)
            for t in range(m**n):
                for lam in ctx.lam:
                    assert ratfun_equal(
                        a_coeff_multinomial(ctx, t, lam), a_coeff_character(ctx, t, lam)
                    )


def test_criterion_08_vandermonde_inverse():
    with Budget(8, "Vandermonde inverse identity", 60):
        for m, n in [(2, 2), (3, 2)]:
            ctx = GeneralContext(m, n, Q)
            nodes = vandermonde_nodes(ctx)
            N = len(nodes)
            one = RatFun.const(ctx.field, ctx.vars, 1)
            zero = RatFun.const(ctx.field, ctx.vars, 0)
            for j in range(N):
                row = vandermonde_inverse_row(ctx, j)
                for i in range(N):
                    s = zero
                    for t in range(N):
                        s = s + row[t] * RatFun.from_poly(nodes[i] ** t)
                    assert ratfun_equal(s, one if i == j else zero)


def test_criterion_09_minimal_polynomial_of_t():
    with Budget(9, "minimal polynomial of T", 30):
        for m, n in CASES_2:
            ctx = GeneralContext(m, n, Q)
            coeffs = minimal_poly_of_T(ctx, check=True)  # degree/membership/annihilation
            assert len(coeffs) == m**n + 1
        ctx = GeneralContext(2, 2, Q)
        coeffs = minimal_poly_of_T(ctx)
        V = ctx.vars
        x1, x2 = (MultiPoly.variable(Q, V, v) for v in V)
        sq = x1 * x1 - x2 * x2
        assert coeffs == [
            sq * sq,
            MultiPoly.zero(Q, V),
            (x1 * x1 + x2 * x2).scale(Q.elem(-2)),
            MultiPoly.zero(Q, V),
            MultiPoly.constant(Q, V, 1),
        ]


def test_criterion_10_char_divides_m_guards(capsys):
    with Budget(10, "p | m guard behavior", 1):
        with pytest.raises(CharDividesM):
            GeneralContext(2, 2, PrimeField(2))
        with pytest.raises(CharDividesM):
            GeneralContext(3, 1, PrimeField(3))
        with pytest.raises(CharDividesM):
            naive_formula(2, PrimeField(2))
        from radext.fields import min_frobenius_exponent

        with pytest.raises(CharDividesM):
            min_frobenius_exponent(2, 6)
        code = cli.main(["reconstruct", "--m", "2", "--n", "2", "--field", "gf:2"])
        capsys.readouterr()
        assert code == 2


def test_criterion_11_mutation_detection():
    with Budget(11, "single-coefficient mutation detection", 10):
        G101 = PrimeField(101)
        f = reconstruct_general(GeneralContext(2, 2, G101), check=False)
        two = G101.elem(2)
        for which in range(len(f.coeffs)):
            bad = TPoly(
                [(t, c.scale(two) if i == which else c) for i, (t, c) in enumerate(f.coeffs)]
            )
            for seed in range(1, 11):
                verdict = verify_reconstruction(bad, TrialPlan(G101, 10, seed))
                assert not verdict.passed and verdict.trials_run <= 10
