"""The coefficient-ring tower and its elements.

Every ring is an immutable descriptor object; elements are :class:`Scalar`
instances holding the ring and a canonical, hashable ``data`` payload, so
equal ring elements always carry identical data.

Supported nodes::

    ZZ, QQ                         integers, rationals
    PrimeField(p)                  residues mod p
    CyclotomicField(e)             Q[z] / Phi_e(z), generator named ``z``
    PolynomialRing(base, vars)     base in {ZZ, QQ}; laurent=True allows x^-1
    FractionField(R)               R a polynomial or Laurent ring
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InexactDivision, NonInvertibleDenominator
from . import polys
from .cyclotomic import cyclotomic_coeffs

VAR_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class Scalar:
    """An element of one of the rings above."""

    __slots__ = ("ring", "data")

    def __init__(self, ring, data):
        self.ring = ring
        self.data = data

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.ring is self.ring or other.ring == self.ring:
                return other.data
            raise TypeError(f"cannot combine elements of {self.ring} and {other.ring}")
        if isinstance(other, int):
            return self.ring._from_int(other)
        if isinstance(other, Fraction):
            return self.ring(other).data
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.ring, self.ring._add(self.data, o))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, self.ring._neg(self.data))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.ring, self.ring._add(self.data, self.ring._neg(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.ring, self.ring._mul(self.data, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.ring, self.ring._div(self.data, o))

    def __rtruediv__(self, other):
        return Scalar(self.ring, self._other(other)) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return Scalar(self.ring, self.ring._inv(self.data)) ** (-n)
        result = self.ring._from_int(1)
        base = self.data
        while n:
            if n & 1:
                result = self.ring._mul(result, base)
            n >>= 1
            if n:
                base = self.ring._mul(base, base)
        return Scalar(self.ring, result)

    def inverse(self):
        return Scalar(self.ring, self.ring._inv(self.data))

    def is_zero(self):
        return self.ring._is_zero(self.data)

    def __bool__(self):
        return not self.ring._is_zero(self.data)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return (other.ring is self.ring or other.ring == self.ring) and self.data == other.data
        if isinstance(other, (int, Fraction)):
            try:
                return self.data == self.ring(other).data
            except (InexactDivision, NonInvertibleDenominator):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.data))

    def sort_key(self):
        return self.ring.sort_key(self.data)

    def __str__(self):
        return self.ring.format(self.data)

    def __repr__(self):
        return f"Scalar({self.ring.format(self.data)!r} in {self.ring})"


class Ring:
    """Common behaviour; subclasses implement the ``_``-prefixed primitives."""

    is_field = False
    characteristic = 0
    variables: tuple = ()

    def zero(self):
        return Scalar(self, self._from_int(0))

    def one(self):
        return Scalar(self, self._from_int(1))

    def from_int(self, n):
        return Scalar(self, self._from_int(n))

    def __call__(self, value):
        if isinstance(value, Scalar):
            return self.coerce(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_int(value.numerator) / self.from_int(value.denominator)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot build an element of {self} from {value!r}")

    def parse(self, text, allow_division=True):
        from .parse import parse_scalar

        return parse_scalar(text, self, allow_division=allow_division)

    def coerce(self, x):
        if x.ring == self:
            return x
        return self._coerce(x)

    def _coerce(self, x):
        raise TypeError(f"no canonical map from {x.ring} to {self}")

    def gen(self, name):
        raise KeyError(name)

    def _div(self, a, b):
        if self._is_zero(b):
            raise ZeroDivisionError(f"division by zero in {self}")
        return self._mul(a, self._inv(b))

    def __str__(self):
        return self.label()

    def label(self):
        raise NotImplementedError


# ---------------------------------------------------------------- leaves


@dataclass(frozen=True)
class Integers(Ring):
    kind = "integers"

    def _from_int(self, n):
        return int(n)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _inv(self, a):
        if a in (1, -1):
            return a
        raise InexactDivision(f"{a} is not a unit in ZZ")

    def _div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in ZZ")
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(f"{a}/{b} is not an integer")
        return q

    def _coerce(self, x):
        if isinstance(x.ring, Rationals) and x.data.denominator == 1:
            return Scalar(self, x.data.numerator)
        return super()._coerce(x)

    def format(self, a):
        return str(a)

    def sort_key(self, a):
        return a

    def descriptor(self):
        return {"kind": "integers"}

    def label(self):
        return "ZZ"


@dataclass(frozen=True)
class Rationals(Ring):
    kind = "rationals"
    is_field = True

    def _from_int(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / a

    def _coerce(self, x):
        if isinstance(x.ring, Integers):
            return Scalar(self, Fraction(x.data))
        if isinstance(x.ring, CyclotomicField) and not any(x.data[1:]):
            return Scalar(self, x.data[0])
        return super()._coerce(x)

    def format(self, a):
        return str(a)

    def sort_key(self, a):
        return a

    def descriptor(self):
        return {"kind": "rationals"}

    def label(self):
        return "QQ"


ZZ = Integers()
QQ = Rationals()


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField(Ring):
    p: int
    kind = "prime-field"
    is_field = True

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"prime-field modulus must be prime, got {self.p}")

    @property
    def characteristic(self):
        return self.p

    def _from_int(self, n):
        return n % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _is_zero(self, a):
        return a == 0

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def _coerce(self, x):
        if isinstance(x.ring, Integers):
            return Scalar(self, x.data % self.p)
        if isinstance(x.ring, Rationals):
            if x.data.denominator % self.p == 0:
                raise NonInvertibleDenominator(f"{x.data} has a denominator divisible by {self.p}")
            return Scalar(self, x.data.numerator * pow(x.data.denominator, -1, self.p) % self.p)
        return super()._coerce(x)

    def format(self, a):
        return str(a)

    def sort_key(self, a):
        return a

    def descriptor(self):
        return {"kind": "prime-field", "p": self.p}

    def label(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class CyclotomicField(Ring):
    """Q(zeta_e) realized as Q[z]/Phi_e(z); data is the coefficient tuple in z."""

    e: int
    kind = "cyclotomic-field"
    is_field = True
    generator = "z"

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("cyclotomic index must be >= 1")

    @property
    def degree(self):
        return len(cyclotomic_coeffs(self.e)) - 1

    @property
    def variables(self):
        return (self.generator,)

    def gen(self, name):
        if name != self.generator:
            raise KeyError(name)
        n = self.degree
        if n == 1:
            # Phi_1 = z - 1, Phi_2 = z + 1
            return Scalar(self, (Fraction(-cyclotomic_coeffs(self.e)[0]),))
        return Scalar(self, tuple(Fraction(int(i == 1)) for i in range(n)))

    def _reduce(self, coeffs):
        mod = cyclotomic_coeffs(self.e)
        n = len(mod) - 1
        c = [Fraction(x) for x in coeffs]
        for i in range(len(c) - 1, n - 1, -1):
            t = c[i]
            if t:
                for j in range(n + 1):
                    c[i - n + j] -= t * mod[j]
        c = c[:n] + [Fraction(0)] * (n - len(c))
        return tuple(c)

    def _from_int(self, n):
        return tuple(Fraction(n if i == 0 else 0) for i in range(self.degree))

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        return self._reduce(polys.umul(list(a), list(b)) or [0])

    def _is_zero(self, a):
        return not any(a)

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("division by zero in cyclotomic field")
        g, s, _ = polys.ugcdex(list(a), [Fraction(c) for c in cyclotomic_coeffs(self.e)])
        if len(g) != 1:
            raise ArithmeticError("cyclotomic inverse: non-unit gcd")
        return self._reduce(s or [0])

    def _constant(self, c):
        return Scalar(self, (Fraction(c),) + (Fraction(0),) * (self.degree - 1))

    def from_coeffs(self, coeffs):
        return Scalar(self, self._reduce(list(coeffs) or [0]))

    def _coerce(self, x):
        if isinstance(x.ring, (Integers, Rationals)):
            return self._constant(x.data)
        if isinstance(x.ring, CyclotomicField) and self.e % x.ring.e == 0:
            z = self.gen(self.generator) ** (self.e // x.ring.e)
            out = self.zero()
            for i, c in enumerate(x.data):
                if c:
                    out = out + z ** i * self._constant(c)
            return out
        return super()._coerce(x)

    def format(self, a):
        terms = {(i,): c for i, c in enumerate(a) if c}
        return _format_poly(terms, (self.generator,))

    def sort_key(self, a):
        return tuple(reversed(a))

    def descriptor(self):
        return {"kind": "cyclotomic-field", "e": self.e}

    def label(self):
        return f"QQ(zeta_{self.e})"


# ---------------------------------------------------------------- polynomials


@dataclass(frozen=True)
class PolynomialRing(Ring):
    """Sparse (Laurent) polynomial ring over ZZ or QQ.

    Coefficients are stored as Fractions in both cases; over ZZ they are
    kept integral.
    """

    base: Ring
    vars: tuple
    laurent: bool = False

    def __post_init__(self):
        if not isinstance(self.base, (Integers, Rationals)):
            raise ValueError("polynomial rings are supported over ZZ or QQ only")
        object.__setattr__(self, "vars", tuple(self.vars))
        if not self.vars:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        for v in self.vars:
            if not VAR_RE.match(v):
                raise ValueError(f"invalid variable name {v!r}")

    @property
    def kind(self):
        return "laurent-ring" if self.laurent else "polynomial-ring"

    @property
    def variables(self):
        return self.vars

    @property
    def nvars(self):
        return len(self.vars)

    def gen(self, name):
        i = self.vars.index(name)
        e = tuple(int(j == i) for j in range(self.nvars))
        return Scalar(self, ((e, Fraction(1)),))

    def from_exponent_map(self, terms):
        return Scalar(self, self._check(polys.freeze({tuple(e): Fraction(c) for e, c in terms.items()})))

    def _check(self, data):
        for e, c in data:
            if not self.laurent and any(x < 0 for x in e):
                raise InexactDivision(f"negative exponent outside a Laurent ring {self}")
            if isinstance(self.base, Integers) and c.denominator != 1:
                raise InexactDivision(f"non-integral coefficient {c} in {self}")
        return data

    def _from_int(self, n):
        return polys.freeze(polys.const(n, self.nvars))

    def _add(self, a, b):
        return polys.freeze(polys.add(dict(a), dict(b)))

    def _neg(self, a):
        return tuple((e, -c) for e, c in a)

    def _mul(self, a, b):
        return polys.freeze(polys.mul(dict(a), dict(b)))

    def _is_zero(self, a):
        return not a

    def _inv(self, a):
        if len(a) == 1:
            (e, c), = a
            if (self.laurent or not any(e)) and (isinstance(self.base, Rationals) or c in (1, -1)):
                return ((tuple(-x for x in e), 1 / c),)
        raise InexactDivision(f"{self.format(a)} is not a unit in {self}")

    def _div(self, a, b):
        if not b:
            raise ZeroDivisionError(f"division by zero in {self}")
        div = polys.divide_laurent if self.laurent else polys.divide_exact
        q = div(dict(a), dict(b))
        if q is None:
            raise InexactDivision(f"({self.format(a)})/({self.format(b)}) is not exact in {self}")
        return self._check(polys.freeze(q))

    def _coerce(self, x):
        r = x.ring
        if isinstance(r, Integers):
            return self.from_int(x.data)
        if isinstance(r, Rationals):
            return Scalar(self, self._check(polys.freeze(polys.const(x.data, self.nvars))))
        if isinstance(r, PolynomialRing) and set(r.vars) <= set(self.vars):
            idx = [self.vars.index(v) for v in r.vars]
            terms = {}
            for e, c in x.data:
                new = [0] * self.nvars
                for i, k in zip(idx, e):
                    new[i] = k
                terms[tuple(new)] = c
            return Scalar(self, self._check(polys.freeze(terms)))
        if isinstance(r, FractionField) and r.base.vars == self.vars and r.den_is_one(x.data):
            return Scalar(self, self._check(x.data[0]))
        return super()._coerce(x)

    def format(self, a):
        return _format_poly(dict(a), self.vars)

    def sort_key(self, a):
        return a

    def descriptor(self):
        return {"kind": self.kind, "base": self.base.descriptor(), "vars": list(self.vars)}

    def label(self):
        inner = ",".join(self.vars)
        if self.laurent:
            inner = ",".join(f"{v},{v}^-1" for v in self.vars)
        return f"{self.base.label()}[{inner}]"


@dataclass(frozen=True)
class FractionField(Ring):
    """Frac(R) for a polynomial or Laurent ring R over ZZ or QQ.

    Data is ``(num, den)``: frozen polynomials over QQ with gcd 1 and ``den``
    of lex-leading coefficient 1.  In the Laurent case ``den`` is an honest
    polynomial with no monomial factor and monomials live in ``num``.
    Frac(ZZ[x]) and Frac(QQ[x]) share the same data.
    """

    base: PolynomialRing
    kind = "fraction-field"
    is_field = True

    def __post_init__(self):
        if not isinstance(self.base, PolynomialRing):
            raise ValueError("fraction fields are formed over polynomial or Laurent rings")

    @property
    def variables(self):
        return self.base.vars

    @property
    def nvars(self):
        return self.base.nvars

    def gen(self, name):
        return self.coerce(self.base.gen(name))

    def _one_poly(self):
        return polys.freeze(polys.const(1, self.nvars))

    def den_is_one(self, a):
        return a[1] == self._one_poly()

    def _make(self, num, den):
        """Canonicalize the fraction num/den (dict polynomials)."""
        if not den:
            raise ZeroDivisionError(f"zero denominator in {self}")
        n = self.nvars
        if not num:
            return (), self._one_poly()
        if self.base.laurent:
            md, den = polys.strip_monomial(den)
            mn, num = polys.strip_monomial(num)
            mono = tuple(x - y for x, y in zip(mn, md))
        else:
            # move negative exponents (never produced, but keep invariant) aside
            mono = (0,) * n
        g = polys.gcd_poly(num, den, n)
        if not polys.is_constant(g):
            num = polys.divide_exact(num, g)
            den = polys.divide_exact(den, g)
        lc = polys.leading(den)[1]
        num = polys.scale(num, 1 / lc)
        den = polys.scale(den, 1 / lc)
        num = polys.shift(num, mono)
        return polys.freeze(num), polys.freeze(den)

    def make(self, num, den):
        """Build ``num/den`` from two elements of the base ring."""
        return Scalar(self, self._make(dict(num.data), dict(den.data)))

    def numerator(self, x):
        return Scalar(PolynomialRing(QQ, self.base.vars, self.base.laurent), x.data[0])

    def denominator(self, x):
        return Scalar(PolynomialRing(QQ, self.base.vars, self.base.laurent), x.data[1])

    def _from_int(self, k):
        return polys.freeze(polys.const(k, self.nvars)), self._one_poly()

    def _add(self, a, b):
        (an, ad), (bn, bd) = a, b
        if ad == bd:
            return self._make(polys.add(dict(an), dict(bn)), dict(ad))
        num = polys.add(polys.mul(dict(an), dict(bd)), polys.mul(dict(bn), dict(ad)))
        return self._make(num, polys.mul(dict(ad), dict(bd)))

    def _neg(self, a):
        return tuple((e, -c) for e, c in a[0]), a[1]

    def _mul(self, a, b):
        if not a[0] or not b[0]:
            return (), self._one_poly()
        return self._make(polys.mul(dict(a[0]), dict(b[0])), polys.mul(dict(a[1]), dict(b[1])))

    def _is_zero(self, a):
        return not a[0]

    def _inv(self, a):
        if not a[0]:
            raise ZeroDivisionError(f"division by zero in {self}")
        return self._make(dict(a[1]), dict(a[0]))

    def _coerce(self, x):
        r = x.ring
        if isinstance(r, (Integers, Rationals)):
            return Scalar(self, (polys.freeze(polys.const(x.data, self.nvars)), self._one_poly()))
        if isinstance(r, PolynomialRing) and r.vars == self.base.vars and (self.base.laurent or not r.laurent):
            return Scalar(self, self._make(dict(x.data), polys.const(1, self.nvars)))
        if isinstance(r, FractionField) and r.base.vars == self.base.vars and (self.base.laurent or not r.base.laurent):
            return Scalar(self, x.data)
        return super()._coerce(x)

    def format(self, a):
        num = _format_poly(dict(a[0]), self.base.vars)
        if a[1] == self._one_poly():
            return num
        den = _format_poly(dict(a[1]), self.base.vars)
        return f"({num})/({den})"

    def sort_key(self, a):
        return a

    def descriptor(self):
        return {"kind": "fraction-field", "base": self.base.descriptor()}

    def label(self):
        return f"Frac({self.base.label()})"


def fraction_field(ring):
    """The field of fractions of ``ring`` (a field is its own)."""
    if ring.is_field:
        return ring
    if isinstance(ring, Integers):
        return QQ
    return FractionField(ring)


def ring_from_descriptor(d):
    """Inverse of ``Ring.descriptor``."""
    if not isinstance(d, dict) or "kind" not in d:
        raise ValueError(f"ring descriptor must be an object with a 'kind', got {d!r}")
    kind = d["kind"]
    if kind == "integers":
        return ZZ
    if kind == "rationals":
        return QQ
    if kind == "prime-field":
        return PrimeField(int(d["p"]))
    if kind == "cyclotomic-field":
        return CyclotomicField(int(d["e"]))
    if kind in ("polynomial-ring", "laurent-ring"):
        return PolynomialRing(ring_from_descriptor(d["base"]), tuple(d["vars"]), kind == "laurent-ring")
    if kind == "fraction-field":
        base = ring_from_descriptor(d["base"])
        if not isinstance(base, PolynomialRing):
            return fraction_field(base)
        return FractionField(base)
    raise ValueError(f"unknown ring kind {kind!r}")


def _format_coeff(c):
    return str(c)


def _format_poly(terms, names):
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        mono = "*".join(
            (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
        )
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
