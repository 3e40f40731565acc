"""Univariate factorization over the field leaves of the tower.

Thin adapter over sympy: coefficients are converted on the way in and the
monic irreducible factors are converted back to :class:`LaurentPoly`.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import UnsupportedField
from .laurent import LaurentPoly
from .rings import CyclotomicField, PrimeField, Rationals


def _backend(ring):
    """Return ``(sympy_domain_kwargs, to_sympy, from_sympy)`` for ``ring``."""
    from sympy import QQ as SQQ

    if isinstance(ring, Rationals) or (isinstance(ring, CyclotomicField) and ring.degree == 1):
        def to(c):
            q = c.data if isinstance(ring, Rationals) else c.data[0]
            return SQQ(q.numerator, q.denominator)

        def back(c):
            q = Fraction(int(c.numerator), int(c.denominator))
            return ring.from_int(0) + q if isinstance(ring, CyclotomicField) else ring(q)

        return {"domain": SQQ}, to, back
    if isinstance(ring, PrimeField):
        return {"modulus": ring.p}, (lambda c: c.data), (lambda c: ring.from_int(int(c)))
    if isinstance(ring, CyclotomicField):
        dom = SQQ.cyclotomic_field(ring.e)

        def to(c):
            return dom.new([SQQ(q.numerator, q.denominator) for q in reversed(c.data)])

        def back(c):
            coeffs = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(c.to_list())]
            return ring.from_coeffs(coeffs)

        return {"domain": dom}, to, back
    raise UnsupportedField(f"no factorization routine over {ring}")


def factor(poly, ring):
    """Monic irreducible factors of a nonzero polynomial (no negative powers).

    Returns a list of ``(factor, multiplicity)`` pairs ordered by degree and
    then by coefficients, so the result is deterministic.
    """
    from sympy import Poly, Symbol

    if not poly or poly.low_degree < 0:
        raise ValueError("factor expects a nonzero polynomial")
    kwargs, to, back = _backend(ring)
    x = Symbol(poly.var)
    dense = [poly[k] if poly[k] else ring.zero() for k in range(poly.degree, -1, -1)]
    p = Poly([to(c) for c in dense], x, **kwargs)
    out = []
    for f, mult in p.factor_list()[1]:
        cs = [back(c) for c in f.rep.to_list()]
        lead = cs[0]
        cs = [c / lead for c in cs]
        n = len(cs) - 1
        out.append((LaurentPoly(poly.var, {n - i: c for i, c in enumerate(cs)}), mult))
    out.sort(key=lambda fm: (fm[0].degree, [(fm[0][k] or ring.zero()).sort_key() for k in range(fm[0].degree + 1)]))
    return out
