import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radext import cli
from radext.errors import InvalidParameter
from radext.expr import (
    Add,
    Const,
    Mul,
    Pow,
    Ratio,
    Var,
    element_to_ast,
    from_json,
    parse_sexpr,
    poly_to_ast,
    to_json,
    to_latex,
    to_sexpr,
    tpoly_to_ast,
)
from radext.fields import CyclotomicField, ExtensionField, PrimeField, RationalField
from radext.general import GeneralContext, reconstruct_general
from radext.verify import Verdict

Q = RationalField()

atoms = st.one_of(
    st.sampled_from([Var("X1"), Var("X2"), Var("T"), Var("eps"), Var("g")]),
    st.integers(-50, 50).map(lambda k: Const(str(k))),
    st.tuples(st.integers(-20, 20), st.integers(1, 20)).map(
        lambda pq: Const(f"{pq[0]}:{pq[1]}")
    ),
    st.integers(0, 100).map(lambda k: Const(f"#{k}")),
)

ast_st = st.recursive(
    atoms,
    lambda children: st.one_of(
        st.lists(children, min_size=2, max_size=4).map(lambda a: Add(tuple(a))),
        st.lists(children, min_size=2, max_size=4).map(lambda a: Mul(tuple(a))),
        st.tuples(children, st.integers(0, 9)).map(lambda bk: Pow(*bk)),
        st.tuples(children, children.filter(lambda d: d not in (Const("0"), Const("#0")))).map(
            lambda nd: Ratio(*nd)
        ),
    ),
    max_leaves=12,
)


class TestRoundTrips:
    @settings(max_examples=100, deadline=None)
    @given(ast_st)
    def test_sexpr_round_trip(self, a):
        assert parse_sexpr(to_sexpr(a)) == a

    @settings(max_examples=100, deadline=None)
    @given(ast_st)
    def test_json_round_trip(self, a):
        assert from_json(to_json(a)) == a

    def test_reconstruction_round_trips(self):
        for m, n in [(2, 2), (3, 2), (2, 3)]:
            f = reconstruct_general(GeneralContext(m, n, Q))
            a = tpoly_to_ast(f)
            assert parse_sexpr(to_sexpr(a)) == a
            assert from_json(to_json(a)) == a

    def test_latex_renders(self):
        f = reconstruct_general(GeneralContext(2, 2, Q))
        s = to_latex(tpoly_to_ast(f))
        assert "\\frac" in s and "X_{1}" in s


class TestElementLiterals:
    def test_rational(self):
        assert element_to_ast(Q.elem(3)) == Const("3")
        half = Q.elem(1) / Q.elem(2)
        assert element_to_ast(half) == Const("1:2")
        assert element_to_ast(Q.elem(-1) / Q.elem(2)) == Const("-1:2")

    def test_prime_field(self):
        assert element_to_ast(PrimeField(7).elem(5)) == Const("#5")

    def test_extension_field(self):
        F = ExtensionField(2, 2)
        g = F.gen()
        assert element_to_ast(g) == Var("g")
        assert element_to_ast(g + F.one()) == Add((Var("g"), Const("#1")))
        assert element_to_ast(F.zero()) == Const("#0")

    def test_cyclotomic(self):
        C = CyclotomicField(3)
        assert element_to_ast(C.eps()) == Var("eps")
        two_eps = C.eps() * C.elem(2)
        assert element_to_ast(two_eps) == Mul((Const("2"), Var("eps")))


class TestParsing:
    def test_errors(self):
        for bad in ["(", ")", "(+ 1)", "(? 1 2)", "(^ X1 X2)", "(/ 1 2 3)", "1 2"]:
            with pytest.raises(InvalidParameter):
                parse_sexpr(bad)

    def test_zero_denominator_rejected(self):
        with pytest.raises(InvalidParameter):
            parse_sexpr("(/ X1 0)")

    def test_atoms(self):
        assert parse_sexpr("-3") == Const("-3")
        assert parse_sexpr("1:2") == Const("1:2")
        assert parse_sexpr("#4") == Const("#4")
        assert parse_sexpr("X12") == Var("X12")


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCliReconstruct:
    def test_m2_n1_is_t(self, capsys):
        code, out, _ = run_cli(capsys, "reconstruct", "--m", "2", "--n", "1",
                               "--field", "rational", "--method", "general", "--out", "sexpr")
        assert code == 0
        assert out.strip() == "T"

    def test_naive_latex_example(self, capsys):
        code, out, _ = run_cli(capsys, "reconstruct", "--m", "2", "--n", "2",
                               "--field", "rational", "--method", "naive", "--out", "latex")
        assert code == 0
        assert "\\frac" in out and "T^{2}" in out

    def test_charp_infers_extension(self, capsys):
        code, out, _ = run_cli(capsys, "reconstruct", "--m", "3", "--n", "2",
                               "--field", "gf:2", "--method", "charp")
        assert code == 0
        assert "(^ T 4)" in out  # q = 4 output

    def test_transpose_flag(self, capsys):
        code, out, _ = run_cli(capsys, "reconstruct", "--m", "2", "--n", "2",
                               "--field", "rational", "--var", "2")
        assert code == 0 and "X2" in out

    def test_json_out_parses(self, capsys):
        code, out, _ = run_cli(capsys, "reconstruct", "--m", "2", "--n", "2",
                               "--field", "gf:5", "--out", "json")
        assert code == 0
        assert from_json(out.strip()) is not None

    def test_determinism(self, capsys):
        args = ("reconstruct", "--m", "3", "--n", "2", "--field", "rational", "--out", "sexpr")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1.encode() == out2.encode()


class TestCliVerify:
    def test_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--m", "2", "--n", "2",
                               "--field", "gf:101", "--method", "general",
                               "--trials", "100", "--seed", "7")
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True and report["trials"] == 100
        assert report["counterexample"] is None

    def test_cross_naive(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--m", "2", "--n", "2",
                               "--field", "gf:101", "--method", "general",
                               "--trials", "50", "--seed", "7", "--cross", "naive")
        assert code == 0 and json.loads(out)["passed"] is True

    def test_char_divides_m_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--m", "2", "--n", "2",
                               "--field", "gf:2", "--method", "general",
                               "--trials", "10", "--seed", "1")
        assert code == 2
        assert "char divides m" in err

    def test_failed_verdict_exit_1(self, capsys, monkeypatch):
        monkeypatch.setattr(
            cli, "verify_reconstruction", lambda f, plan: Verdict(False, 1, 0, None)
        )
        code, out, _ = run_cli(capsys, "verify", "--m", "2", "--n", "2",
                               "--field", "gf:101", "--trials", "10", "--seed", "1")
        assert code == 1
        assert json.loads(out)["passed"] is False

    def test_determinism(self, capsys):
        args = ("verify", "--m", "2", "--n", "2", "--field", "gf:101",
                "--trials", "20", "--seed", "9")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1.encode() == out2.encode()


class TestCliCrosscheck:
    @pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 4)])
    def test_pass(self, capsys, q, n):
        code, out, _ = run_cli(capsys, "crosscheck-delta", "--q", str(q), "--n", str(n))
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_out_of_range(self, capsys):
        assert run_cli(capsys, "crosscheck-delta", "--q", "17", "--n", "2")[0] == 2
        assert run_cli(capsys, "crosscheck-delta", "--q", "4", "--n", "5")[0] == 2
        assert run_cli(capsys, "crosscheck-delta", "--q", "6", "--n", "2")[0] == 2


class TestCliMinpoly:
    def test_m2_n1(self, capsys):
        code, out, _ = run_cli(capsys, "minpoly-t", "--m", "2", "--n", "1",
                               "--field", "rational")
        assert code == 0
        assert out.strip() == "(+ (^ X 2) (* -1 (^ X1 2)))"

    def test_m1_n3_linear(self, capsys):
        code, out, _ = run_cli(capsys, "minpoly-t", "--m", "1", "--n", "3",
                               "--field", "rational")
        assert code == 0
        a = parse_sexpr(out.strip())
        assert isinstance(a, Add)

    def test_too_large(self, capsys):
        assert run_cli(capsys, "minpoly-t", "--m", "2", "--n", "7",
                       "--field", "rational")[0] == 2


class TestCliErrors:
    def test_bad_field(self, capsys):
        assert run_cli(capsys, "reconstruct", "--m", "2", "--n", "2", "--field", "zz")[0] == 2

    def test_bad_flags(self, capsys):
        assert cli.main(["reconstruct", "--m", "2"]) == 2

    def test_charp_needs_finite_field(self, capsys):
        assert run_cli(capsys, "reconstruct", "--m", "2", "--n", "2",
                       "--field", "rational", "--method", "charp")[0] == 2

    def test_naive_m_not_2(self, capsys):
        assert run_cli(capsys, "reconstruct", "--m", "3", "--n", "2",
                       "--field", "rational", "--method", "naive")[0] == 2

    def test_console_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "radext.cli", "reconstruct", "--m", "2", "--n", "1",
             "--field", "rational"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0 and proc.stdout.strip() == "T"
