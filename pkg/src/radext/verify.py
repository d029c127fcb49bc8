"""Seeded randomized identity testing for reconstruction outputs.

All sampling is driven by the splitmix64 generator (Steele-Lea-Flood),
fixed here by its three constants so that a given plan reproduces the
exact same trials everywhere:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

(all arithmetic mod 2^64).  Trial i uses an independent sub-stream whose
seed is the i-th output of the stream seeded with the plan seed, so
trials are order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EvalDenominatorZero,
    FieldTooSmall,
    InvalidParameter,
    RetriesExhausted,
)
from .fields import Element, Field, RationalField
from .multipoly import TPoly

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

RATIONAL_SAMPLE_BOUND = 10**6


class SplitMix64:
    """The splitmix64 generator; 64-bit state, 64-bit outputs."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next64()
            if v < limit:
                return v % n


@dataclass(frozen=True)
class TrialPlan:
    field: Field
    trials: int
    seed: int
    retry_limit: int = 1000

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidParameter("trials must be >= 1")
        if self.retry_limit < self.trials:
            raise InvalidParameter("retry limit must be at least the trial count")


@dataclass(frozen=True)
class Verdict:
    passed: bool
    trials_run: int
    retries: int
    counterexample: dict | None = None

    def to_json(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = {
                "point": [repr(x) for x in self.counterexample["point"]],
                "expected": repr(self.counterexample["expected"]),
                "got": repr(self.counterexample["got"]),
            }
        return {
            "passed": self.passed,
            "trials": self.trials_run,
            "retries": self.retries,
            "counterexample": ce,
        }


def _sample(rng: SplitMix64, field: Field) -> Element:
    if isinstance(field, RationalField):
        k = rng.below(2 * RATIONAL_SAMPLE_BOUND + 1) - RATIONAL_SAMPLE_BOUND
        return field.elem(k)
    if field.order is None:
        raise InvalidParameter(f"cannot sample uniformly from {field}")
    return field.element_at(rng.below(field.order))


class RatFunReconstruction:
    """Adapter presenting a rational function of (X1..Xn, T) — e.g. the
    small-n closed forms — through the TPoly evaluation interface."""

    __slots__ = ("ratfun", "vars")

    def __init__(self, f):
        if "T" not in f.vars:
            raise InvalidParameter("expected a rational function involving T")
        self.ratfun = f
        self.vars = tuple(v for v in f.vars if v != "T")

    def evaluate(self, point: dict, tval: Element) -> Element:
        full = dict(point)
        full["T"] = tval
        return self.ratfun.evaluate(full)

    def den_degree(self) -> int:
        return max(sum(e) for e in self.ratfun.den.terms)


def _den_degree(f) -> int:
    """Total degree of the product of the distinct denominators (shared
    denominators count once)."""
    if isinstance(f, RatFunReconstruction):
        return f.den_degree()
    seen = set()
    total = 0
    for _, c in f.coeffs:
        key = frozenset(c.den.terms.items())
        if key not in seen:
            seen.add(key)
            total += max(sum(e) for e in c.den.terms)
    return total


def _guard_field(field: Field, degree: int):
    if field.order is not None and field.order <= 2 * degree:
        raise FieldTooSmall(
            f"field of order {field.order} too small for denominator degree {degree}"
        )


def _run_trials(plan: TrialPlan, nvars: int, free_t: bool, check):
    """Shared trial loop.  check(point, tval) returns None on agreement or
    an (expected, got) pair; it may raise EvalDenominatorZero to redraw."""
    field = plan.field
    seeder = SplitMix64(plan.seed)
    sub_seeds = [seeder.next64() for _ in range(plan.trials)]
    retries = 0
    for i, sub in enumerate(sub_seeds):
        rng = SplitMix64(sub)
        while True:
            xs = [_sample(rng, field) for _ in range(nvars)]
            tval = _sample(rng, field) if free_t else sum(xs[1:], xs[0])
            try:
                mismatch = check(xs, tval)
            except EvalDenominatorZero:
                retries += 1
                if retries > plan.retry_limit:
                    raise RetriesExhausted(
                        f"more than {plan.retry_limit} redraws hit a zero denominator"
                    ) from None
                continue
            break
        if mismatch is not None:
            expected, got = mismatch
            return Verdict(
                False,
                i + 1,
                retries,
                {"point": xs + [tval], "expected": expected, "got": got},
            )
    return Verdict(True, plan.trials, retries, None)


def verify_reconstruction(f: TPoly, plan: TrialPlan) -> Verdict:
    """Check f(x^m-point, t = sum x_i) = x_1 at seeded random points."""
    _guard_field(plan.field, _den_degree(f))
    names = f.vars

    def check(xs, tval):
        point = dict(zip(names, xs))
        got = f.evaluate(point, tval)
        expected = xs[0]
        if got == expected:
            return None
        return (expected, got)

    return _run_trials(plan, len(names), False, check)


def verify_cross(fa: TPoly, fb: TPoly, plan: TrialPlan, bind_t: bool = False) -> Verdict:
    """Compare two T-polynomials at common random points.  With bind_t the
    t-value is sum x_i (agreement as reconstructions); otherwise t is drawn
    independently (agreement as functions of a free T)."""
    if fa.vars != fb.vars:
        raise InvalidParameter("operands use different variable sets")
    _guard_field(plan.field, _den_degree(fa) + _den_degree(fb))
    names = fa.vars

    def check(xs, tval):
        point = dict(zip(names, xs))
        va = fa.evaluate(point, tval)
        vb = fb.evaluate(point, tval)
        if va == vb:
            return None
        return (va, vb)

    return _run_trials(plan, len(names), not bind_t, check)
