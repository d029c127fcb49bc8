"""Exact coefficient fields: rationals, GF(p), GF(p^e) and cyclotomic fields Q(eps_m).

Every element is stored in a canonical representation, so equality of
elements is equality of representations:

* rationals: ``gmpy2.mpq`` (always reduced, positive denominator)
* GF(p): an int in ``[0, p)``
* GF(p^e): a tuple of e ints, coefficients of a polynomial in the
  generator ``g``, ascending degree, reduced mod the defining modulus
* Q(eps_m): a tuple of ``phi(m)`` mpq's, coefficients in ``eps``, reduced
  mod the m-th cyclotomic polynomial

Nonzero elements are inverted by extended gcd in the quotient ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, isqrt

from gmpy2 import mpq

from .errors import (
    CharDividesM,
    FieldMismatch,
    InvalidParameter,
    NoSuchRoot,
    NotPrime,
    ReducibleModulus,
    WrongCharacteristic,
)

# ---------------------------------------------------------------------------
# integer / univariate-polynomial helpers


def is_prime(p: int) -> bool:
    """Trial division up to sqrt(p); inputs are desk-scale."""
    if p < 2:
        return False
    for d in range(2, isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def _zpoly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _zpoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _zpoly_divexact(a, b):
    """Divide integer polynomials exactly (b monic); raises if not exact."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        q[i] = a[i + len(b) - 1]
        for j, y in enumerate(b):
            a[i + j] -= q[i] * y
    if any(a[: len(b) - 1]):
        raise InvalidParameter("inexact polynomial division")
    return q


_CYCLOTOMIC_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending degree, computed from
    X^m - 1 = prod_{d | m} Phi_d by exact division."""
    if m <= 0:
        raise InvalidParameter("m must be positive")
    if m in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[m]
    num = [-1] + [0] * (m - 1) + [1]  # X^m - 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _zpoly_mul(den, list(cyclotomic_poly(d)))
    phi = tuple(_zpoly_divexact(num, den))
    _CYCLOTOMIC_CACHE[m] = phi
    return phi


# mod-p univariate polynomials, ascending coefficient lists


def _pp_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, mod, p)


def _make_monic(a, p):
    a = _zpoly_trim(a)
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _poly_mod(a, b, p):
    """Remainder of a mod b over GF(p); b monic."""
    a = [c % p for c in a]
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _zpoly_trim(a[:db])


def is_irreducible_mod_p(coeffs, p: int) -> bool:
    """Irreducibility over GF(p): root check for degree <= 3, otherwise
    gcd with Frobenius powers X^(p^k) - X for k <= deg/2."""
    c = _zpoly_trim([x % p for x in coeffs])
    deg = len(c) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if deg <= 3:
        return all(_zpoly_eval_mod(c, x, p) != 0 for x in range(p))
    monic = _make_monic(c, p)
    r = [0, 1]  # X
    for _ in range(deg // 2):
        r = _pp_powmod(r, p, monic, p)
        diff = list(r) + [0] * max(0, 2 - len(r))
        diff[1] = (diff[1] - 1) % p
        g = _pp_gcd_simple(monic, _zpoly_trim(diff), p)
        if len(g) - 1 >= 1:
            return False
    return True


def _zpoly_eval_mod(c, x, p):
    acc = 0
    for coeff in reversed(c):
        acc = (acc * x + coeff) % p
    return acc


def _pp_powmod(base, exp, mod, p):
    result = [1]
    b = _poly_mod(base, mod, p)
    while exp:
        if exp & 1:
            result = _pp_mulmod(result, b, mod, p)
        b = _pp_mulmod(b, b, mod, p)
        exp >>= 1
    return result


def _pp_gcd_simple(a, b, p):
    a, b = _zpoly_trim(a), _zpoly_trim(b)
    while b:
        monic = _make_monic(b, p)
        a, b = monic, _poly_mod(a, monic, p)
    return a


# ---------------------------------------------------------------------------
# field spec


@dataclass(frozen=True)
class FieldSpec:
    """Description of a coefficient field.

    kind is one of "rational", "prime", "extension", "cyclotomic".
    """

    kind: str
    p: int = 0
    e: int = 1
    m: int = 0
    modulus: tuple[int, ...] | None = None


def make_field(spec: FieldSpec) -> "Field":
    if spec.kind == "rational":
        return RationalField()
    if spec.kind == "prime":
        return PrimeField(spec.p)
    if spec.kind == "extension":
        return ExtensionField(spec.p, spec.e, spec.modulus)
    if spec.kind == "cyclotomic":
        return CyclotomicField(spec.m)
    raise InvalidParameter(f"unknown field kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# elements


class Element:
    """A field element: a field handle plus a canonical representative.

    Immutable; all arithmetic is exact.
    """

    __slots__ = ("field", "rep")

    def __init__(self, field: "Field", rep):
        self.field = field
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} vs {self.field}")
            return other.rep
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.add(self.rep, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.sub(self.rep, r))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.sub(r, self.rep))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.mul(self.rep, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.mul(self.rep, self.field.inv(r)))

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Element(self.field, self.field.mul(r, self.field.inv(self.rep)))

    def __neg__(self):
        return Element(self.field, self.field.neg(self.rep))

    def __pow__(self, k: int):
        return Element(self.field, self.field.pow(self.rep, k))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rep))

    def is_zero(self) -> bool:
        return self.rep == self.field.zero_rep

    def inverse(self) -> "Element":
        return Element(self.field, self.field.inv(self.rep))

    def __repr__(self):
        return self.field.fmt(self.rep)


class Field:
    """Base for field handles.  Handles are immutable and hashable; two
    handles with the same parameters compare equal."""

    char: int
    order: int | None  # None for infinite fields

    def elem(self, x) -> Element:
        if isinstance(x, Element):
            if x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x
        return Element(self, self.from_int(x))

    def zero(self) -> Element:
        return Element(self, self.zero_rep)

    def one(self) -> Element:
        return Element(self, self.one_rep)

    def pow(self, rep, k: int):
        if k < 0:
            rep = self.inv(rep)
            k = -k
        result = self.one_rep
        while k:
            if k & 1:
                result = self.mul(result, rep)
            rep = self.mul(rep, rep)
            k >>= 1
        return result

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # finite-field extras -------------------------------------------------

    def elements(self):
        """Deterministic enumeration of all elements (finite fields only)."""
        raise NotImplementedError

    def multiplicative_generator(self) -> Element:
        """Smallest generator of the multiplicative group in enumeration
        order, found by exhaustive order search."""
        if self.order is None:
            raise NoSuchRoot("infinite field has no finite generator")
        cached = getattr(self, "_gen_cache", None)
        if cached is not None:
            return cached
        target = self.order - 1
        for cand in self.elements():
            if cand.is_zero():
                continue
            k, acc = 1, cand
            while acc != self.one() and k <= target:
                acc = acc * cand
                k += 1
            if k == target:
                self._gen_cache = cand
                return cand
        raise NoSuchRoot("no multiplicative generator found")  # pragma: no cover


class RationalField(Field):
    char = 0
    order = None
    zero_rep = mpq(0)
    one_rep = mpq(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    @staticmethod
    def from_int(k):
        return mpq(k)

    @staticmethod
    def fmt(rep):
        return str(rep)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Q"

    @property
    def spec(self):
        return FieldSpec("rational")


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.zero_rep = 0
        self.one_rep = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, rep, k: int):
        if k < 0:
            return pow(self.inv(rep), -k, self.p)
        return pow(rep, k, self.p)

    def from_int(self, k):
        return k % self.p

    def fmt(self, rep):
        return f"#{rep}"

    def elements(self):
        for k in range(self.p):
            yield Element(self, k)

    def element_at(self, idx: int) -> Element:
        return Element(self, idx % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def spec(self):
        return FieldSpec("prime", p=self.p)


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e over GF(p), enumerating
    coefficient vectors (c_0, ..., c_{e-1}) as base-p digits of 0, 1, 2, ..."""
    for k in itertools.count():
        digits = []
        kk = k
        for _ in range(e):
            digits.append(kk % p)
            kk //= p
        if kk:
            raise ReducibleModulus(f"no irreducible of degree {e} over GF({p})")
        coeffs = tuple(digits) + (1,)
        if is_irreducible_mod_p(coeffs, p):
            return coeffs


class ExtensionField(Field):
    """GF(p^e) presented as GF(p)[X]/(modulus)."""

    def __init__(self, p: int, e: int, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise InvalidParameter("e must be positive")
        if modulus is None:
            modulus = default_modulus(p, e)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise InvalidParameter("modulus must be monic of degree e")
        if not is_irreducible_mod_p(modulus, p):
            raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.modulus = modulus
        self.char = p
        self.order = p**e
        self.zero_rep = (0,) * e
        self.one_rep = ((1 % p,) + (0,) * (e - 1)) if e > 1 else (1 % p,)
        # x^k mod modulus for k in [e, 2e-2], for fast reduction
        self._xpow = []
        cur = [0] * e  # will hold x^e ...
        # x^e = -(m_0 + ... + m_{e-1} x^{e-1})
        cur = [(-c) % p for c in modulus[:e]]
        for _ in range(e - 1):
            self._xpow.append(tuple(cur))
            # multiply by x
            hi = cur[-1]
            cur = [0] + cur[:-1]
            if hi:
                for j in range(e):
                    cur[j] = (cur[j] - hi * modulus[j]) % p
        if e > 1:
            self._xpow.append(tuple(cur))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, e = self.p, self.e
        conv = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:e]]
        for k in range(e, 2 * e - 1):
            c = conv[k] % p
            if c:
                red = self._xpow[k - e]
                for j in range(e):
                    out[j] = (out[j] + c * red[j]) % p
        return tuple(out)

    def inv(self, a):
        if a == self.zero_rep:
            raise ZeroDivisionError("inverse of zero")
        # extended gcd of a with the modulus over GF(p)
        p = self.p
        r0, r1 = list(self.modulus), _zpoly_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            inv_lead = pow(r1[-1], p - 2, p)
            q = [0] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
            rr = list(r0)
            for i in range(len(rr) - 1, len(r1) - 2, -1):
                c = (rr[i] * inv_lead) % p
                if c:
                    q[i - (len(r1) - 1)] = c
                    for j, y in enumerate(r1):
                        rr[i - (len(r1) - 1) + j] = (rr[i - (len(r1) - 1) + j] - c * y) % p
            rr = _zpoly_trim(rr)
            qs1 = _zpoly_trim([x % p for x in _zpoly_mul(q, s1)]) if q else []
            ns = [0] * max(len(s0), len(qs1))
            for i, x in enumerate(s0):
                ns[i] = x
            for i, x in enumerate(qs1):
                ns[i] = (ns[i] - x) % p
            r0, r1 = r1, rr
            s0, s1 = s1, _zpoly_trim(ns)
        # r0 = gcd (a nonzero constant since modulus is irreducible)
        c_inv = pow(r0[0], p - 2, p)
        out = [(x * c_inv) % p for x in s0]
        out += [0] * (self.e - len(out))
        return tuple(out[: self.e])

    def from_int(self, k):
        return ((k % self.p,) + (0,) * (self.e - 1)) if self.e > 1 else (k % self.p,)

    def gen(self) -> Element:
        """The canonical generator g (image of X)."""
        if self.e == 1:
            return Element(self, ((-self.modulus[0]) % self.p,))
        return Element(self, (0, 1) + (0,) * (self.e - 2))

    def fmt(self, rep):
        parts = []
        for i, c in enumerate(rep):
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*g" if c != 1 else "g")
            else:
                parts.append(f"{c}*g^{i}" if c != 1 else f"g^{i}")
        return "#(" + (" + ".join(parts) if parts else "0") + ")"

    def elements(self):
        for idx in range(self.order):
            yield self.element_at(idx)

    def element_at(self, idx: int) -> Element:
        digits = []
        for _ in range(self.e):
            digits.append(idx % self.p)
            idx //= self.p
        return Element(self, tuple(digits))

    def in_subfield(self, x: Element, q: int) -> bool:
        """True iff x lies in the subfield fixed by the q-power Frobenius."""
        return frobenius(x, q) == x

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ext", self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    @property
    def spec(self):
        return FieldSpec("extension", p=self.p, e=self.e, modulus=self.modulus)


class CyclotomicField(Field):
    """Q(eps_m) = Q[X]/(Phi_m), elements reduced mod Phi_m."""

    char = 0
    order = None

    def __init__(self, m: int):
        if m < 1:
            raise InvalidParameter("m must be positive")
        self.m = m
        self.phi = cyclotomic_poly(m)
        self.deg = len(self.phi) - 1
        self.zero_rep = (mpq(0),) * self.deg
        self.one_rep = (mpq(1),) + (mpq(0),) * (self.deg - 1)
        # eps^k mod Phi_m for k in [deg, 2*deg-2]
        self._xpow = []
        cur = [mpq(-c) for c in self.phi[: self.deg]]
        for _ in range(self.deg - 1):
            self._xpow.append(tuple(cur))
            hi = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            if hi:
                for j in range(self.deg):
                    cur[j] -= hi * self.phi[j]
        if self.deg > 1:
            self._xpow.append(tuple(cur))
        self._eps_pows = None

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.deg
        conv = [mpq(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                red = self._xpow[k - d]
                for j in range(d):
                    out[j] += c * red[j]
        return tuple(out)

    def inv(self, a):
        if a == self.zero_rep:
            raise ZeroDivisionError("inverse of zero")
        r0 = [mpq(c) for c in self.phi]
        r1 = [mpq(c) for c in a]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [mpq(1)]
        while r1:
            inv_lead = 1 / r1[-1]
            q = [mpq(0)] * (len(r0) - len(r1) + 1)
            rr = list(r0)
            for i in range(len(rr) - 1, len(r1) - 2, -1):
                c = rr[i] * inv_lead
                if c:
                    q[i - (len(r1) - 1)] = c
                    for j, y in enumerate(r1):
                        rr[i - (len(r1) - 1) + j] -= c * y
            while rr and rr[-1] == 0:
                rr.pop()
            qs1 = _zpoly_mul(q, s1) if q and s1 else []
            ns = [mpq(0)] * max(len(s0), len(qs1))
            for i, x in enumerate(s0):
                ns[i] += x
            for i, x in enumerate(qs1):
                ns[i] -= x
            while ns and ns[-1] == 0:
                ns.pop()
            r0, r1 = r1, rr
            s0, s1 = s1, ns
        c_inv = 1 / r0[0]
        out = [x * c_inv for x in s0]
        out += [mpq(0)] * (self.deg - len(out))
        return tuple(out[: self.deg])

    def from_int(self, k):
        return (mpq(k),) + (mpq(0),) * (self.deg - 1)

    def from_mpq(self, q):
        return (mpq(q),) + (mpq(0),) * (self.deg - 1)

    def eps(self) -> Element:
        """The canonical primitive m-th root of unity."""
        if self.deg == 1:
            return Element(self, (mpq(-self.phi[0]),))
        return Element(self, (mpq(0), mpq(1)) + (mpq(0),) * (self.deg - 2))

    def fmt(self, rep):
        parts = []
        for i, c in enumerate(rep):
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*eps" if c != 1 else "eps")
            else:
                parts.append(f"{c}*eps^{i}" if c != 1 else f"eps^{i}")
        return "(" + (" + ".join(parts) if parts else "0") + ")"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.m == self.m

    def __hash__(self):
        return hash(("cyc", self.m))

    def __repr__(self):
        return f"Q(eps_{self.m})"

    @property
    def spec(self):
        return FieldSpec("cyclotomic", m=self.m)


# ---------------------------------------------------------------------------
# operations on fields


def min_frobenius_exponent(p: int, m: int) -> int:
    """Smallest e >= 1 with p^e = 1 (mod m)."""
    if m <= 0:
        raise InvalidParameter("m must be positive")
    if m == 1:
        return 1
    if p % m == 0 or gcd(p, m) != 1:
        raise CharDividesM(f"characteristic {p} divides m={m}" if m % p == 0
                           else f"gcd({p},{m}) != 1")
    e, acc = 1, p % m
    while acc != 1:
        acc = (acc * p) % m
        e += 1
    return e


def primitive_root_of_unity(field: Field, m: int) -> Element:
    """An element of exact multiplicative order m, chosen deterministically."""
    if m <= 0:
        raise InvalidParameter("m must be positive")
    if m == 1:
        return field.one()
    if isinstance(field, RationalField):
        if m == 2:
            return field.elem(-1)
        raise NoSuchRoot(f"Q has no primitive {m}th root of unity")
    if isinstance(field, CyclotomicField):
        if field.m % m == 0:
            return field.eps() ** (field.m // m)
        if m == 2:
            return field.elem(-1)
        raise NoSuchRoot(f"Q(eps_{field.m}) has no primitive {m}th root of unity")
    q = field.order
    if (q - 1) % m != 0:
        raise NoSuchRoot(f"{m} does not divide {q}-1")
    g = field.multiplicative_generator()
    return g ** ((q - 1) // m)


def frobenius(x: Element, q: int) -> Element:
    """x^q for q a power of the field characteristic."""
    p = x.field.char
    if p == 0:
        raise WrongCharacteristic("frobenius requires positive characteristic")
    qq = q
    while qq > 1 and qq % p == 0:
        qq //= p
    if qq != 1 or q < p:
        raise WrongCharacteristic(f"{q} is not a power of char {p}")
    return x**q


def embedding(src: Field, dst: Field):
    """A coefficient-embedding map src -> dst (on representatives), for the
    pairs this package needs; raises FieldMismatch otherwise."""
    if src == dst:
        return lambda rep: rep
    if isinstance(src, RationalField) and isinstance(dst, CyclotomicField):
        return dst.from_mpq
    if isinstance(src, PrimeField) and isinstance(dst, ExtensionField) and src.p == dst.p:
        return dst.from_int
    if isinstance(src, PrimeField) and isinstance(dst, PrimeField) and src.p == dst.p:
        return lambda rep: rep
    raise FieldMismatch(f"no embedding {src} -> {dst}")
