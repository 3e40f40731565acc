"""Sparse multivariate (Laurent) polynomials over Q, stored as dicts.

A polynomial is a ``dict`` mapping an exponent tuple to a nonzero
:class:`~fractions.Fraction`.  Exponents may be negative (Laurent case).
The ring classes in :mod:`grdecomp.exact.rings` freeze these dicts into
sorted tuples for canonical storage.

Dense univariate helpers (coefficient lists, lowest degree first) live at
the bottom; they back the cyclotomic field arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Poly = dict


def normalize(p):
    return {e: c for e, c in p.items() if c}


def freeze(p):
    """Canonical hashable form: terms sorted by exponent, descending."""
    return tuple(sorted(((e, Fraction(c)) for e, c in p.items() if c), reverse=True))


def thaw(t):
    return dict(t)


def const(c, nvars):
    c = Fraction(c)
    return {(0,) * nvars: c} if c else {}


def add(p, q):
    r = dict(p)
    for e, c in q.items():
        s = r.get(e, 0) + c
        if s:
            r[e] = s
        else:
            r.pop(e, None)
    return r


def neg(p):
    return {e: -c for e, c in p.items()}


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if not c:
        return {}
    return {e: c * v for e, v in p.items()}


def mul(p, q):
    r = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = r.get(e, 0) + c1 * c2
            if s:
                r[e] = s
            else:
                r.pop(e, None)
    return r


def power(p, n, nvars):
    result = const(1, nvars)
    base = p
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def shift(p, mono):
    """Multiply by the monomial with exponent vector ``mono``."""
    return {tuple(a + b for a, b in zip(e, mono)): c for e, c in p.items()}


def leading(p):
    e = max(p)
    return e, p[e]


def min_exponents(p):
    """Componentwise minimum exponent, i.e. the largest monomial dividing ``p``."""
    exps = list(p)
    return tuple(min(col) for col in zip(*exps))


def strip_monomial(p):
    """Split ``p`` as ``x^m * P`` with ``P`` not divisible by any variable."""
    m = min_exponents(p)
    return m, shift(p, tuple(-a for a in m))


def is_constant(p):
    return all(not any(e) for e in p)


def content(p):
    """Positive rational content: gcd of numerators over lcm of denominators."""
    num = 0
    den = 1
    for c in p.values():
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    return Fraction(num, den)


def primitive_integer_part(p):
    """Return ``(c, P)`` with ``p = c * P``, ``P`` integral and primitive."""
    if not p:
        return Fraction(0), {}
    c = content(p)
    return c, {e: v / c for e, v in p.items()}


def divide_exact(a, b):
    """Quotient ``a / b`` in Q[x_1..x_n] if exact, otherwise ``None``.

    Lex-order division.  Both arguments must have nonnegative exponents.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb, cb = leading(b)
    q = {}
    r = dict(a)
    while r:
        lr, cr = leading(r)
        diff = tuple(x - y for x, y in zip(lr, lb))
        if any(d < 0 for d in diff):
            return None
        t = {diff: cr / cb}
        q = add(q, t)
        r = sub(r, mul(t, b))
    return q


def divide_laurent(a, b):
    """Exact quotient in the Laurent polynomial ring, or ``None``."""
    if not a:
        return {}
    ma, pa = strip_monomial(a)
    mb, pb = strip_monomial(b)
    q = divide_exact(pa, pb)
    if q is None:
        return None
    return shift(q, tuple(x - y for x, y in zip(ma, mb)))


def gcd_poly(a, b, nvars):
    """Monic (lex leading coefficient 1) gcd of two polynomials over Q."""
    if not a and not b:
        return {}
    if not a:
        return scale(b, 1 / leading(b)[1])
    if not b:
        return scale(a, 1 / leading(a)[1])
    if is_constant(a) or is_constant(b):
        return const(1, nvars)
    if nvars == 1:
        g = udense_gcd(to_dense(a), to_dense(b))
        return from_dense(g)
    return _gcd_sympy(a, b, nvars)


def _gcd_sympy(a, b, nvars):
    import sympy

    gens = sympy.symbols(f"g0:{nvars}")
    pa = sympy.Poly.from_dict({e: sympy.Rational(c.numerator, c.denominator) for e, c in a.items()}, *gens, domain="QQ")
    pb = sympy.Poly.from_dict({e: sympy.Rational(c.numerator, c.denominator) for e, c in b.items()}, *gens, domain="QQ")
    g = pa.gcd(pb)
    out = {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in g.as_dict().items()}
    return scale(out, 1 / leading(out)[1])


# dense univariate helpers, coefficient lists lowest degree first


def to_dense(p):
    if not p:
        return []
    deg = max(e[0] for e in p)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.items():
        out[e[0]] = Fraction(c)
    return out


def from_dense(coeffs):
    return {(i,): Fraction(c) for i, c in enumerate(coeffs) if c}


def utrim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def udivmod(a, b):
    a = utrim(a)
    b = utrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = [Fraction(c) for c in a]
    lb = Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] / lb
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                r[i + j] -= c * bj
    return utrim(q), utrim(r)


def umul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return utrim(out)


def usub(a, b):
    n = max(len(a), len(b))
    return utrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def umonic(a):
    a = utrim(a)
    if not a:
        return a
    lc = Fraction(a[-1])
    return [Fraction(c) / lc for c in a]


def udense_gcd(a, b):
    a, b = utrim(a), utrim(b)
    while b:
        _, r = udivmod(a, b)
        a, b = b, r
    return umonic(a)


def ugcdex(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = utrim(a), utrim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = udivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, usub(s0, umul(q, s1))
        t0, t1 = t1, usub(t0, umul(q, t1))
    lc = Fraction(r0[-1])
    return [c / lc for c in r0], [c / lc for c in s0], [c / lc for c in t0]
