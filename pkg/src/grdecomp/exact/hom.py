"""Ring morphisms out of the tower, defined by generator assignments."""
from __future__ import annotations

from fractions import Fraction

from ..errors import NonInvertibleDenominator
from . import polys
from .rings import CyclotomicField, FractionField, Integers, PolynomialRing, PrimeField, Rationals, Scalar


def _map_rational(c, target):
    c = Fraction(c)
    num = target.from_int(c.numerator)
    if c.denominator == 1:
        return num
    den = target.from_int(c.denominator)
    if not den:
        raise NonInvertibleDenominator(f"denominator {c.denominator} of {c} maps to 0 in {target}")
    return num / den


def _map_poly(terms, values, target):
    total = target.zero()
    for e, c in terms.items():
        term = _map_rational(c, target)
        for v, k in zip(values, e):
            if k:
                if k < 0 and not v:
                    raise NonInvertibleDenominator(f"inverted variable maps to 0 in {target}")
                term = term * v ** k
        total = total + term
    return total


def _integral_fraction(num, den):
    """Rewrite num/den (polys over QQ) as N/D with N, D integral and coprime over ZZ."""
    cn, pn = polys.primitive_integer_part(num)
    cd, pd = polys.primitive_integer_part(den)
    c = cn / cd
    return polys.scale(pn, Fraction(c.numerator)), polys.scale(pd, Fraction(c.denominator))


def hom_apply(assignments, x, target=None):
    """Image of ``x`` under the ring morphism extending ``assignments``.

    ``assignments`` maps variable names of ``x``'s ring (or the generator
    ``z`` of a cyclotomic field) to elements of the target field.  Elements
    of a fraction field are mapped through their reduced integral
    numerator/denominator pair; a denominator with image 0 raises
    :class:`NonInvertibleDenominator` (``x`` is outside the localization).
    """
    if target is None:
        if not assignments:
            raise ValueError("target ring required when there are no assignments")
        target = next(iter(assignments.values())).ring
    ring = x.ring
    if isinstance(ring, Integers):
        return target.from_int(x.data)
    if isinstance(ring, Rationals):
        return _map_rational(x.data, target)
    if isinstance(ring, PrimeField):
        if target.characteristic != ring.p:
            raise NonInvertibleDenominator(f"no ring map {ring} -> {target}")
        return target.from_int(x.data)
    if isinstance(ring, CyclotomicField):
        z = assignments.get(ring.generator)
        if z is None:
            if ring.degree == 1:
                z = target.from_int(int(x.ring.gen(ring.generator).data[0]))
            else:
                raise KeyError(f"no image given for {ring.generator}")
        terms = {(i,): c for i, c in enumerate(x.data) if c}
        return _map_poly(terms, [z], target)
    if isinstance(ring, PolynomialRing):
        values = [assignments[v] for v in ring.vars]
        return _map_poly(dict(x.data), values, target)
    if isinstance(ring, FractionField):
        values = [assignments[v] for v in ring.base.vars]
        num, den = dict(x.data[0]), dict(x.data[1])
        if target.characteristic:
            # the ZZ-content of the denominator matters in positive characteristic
            num, den = _integral_fraction(num, den)
        d = _map_poly(den, values, target)
        if not d:
            raise NonInvertibleDenominator(
                f"denominator {ring.base.format(x.data[1])} of {x} maps to 0 in {target}"
            )
        return _map_poly(num, values, target) / d
    return target.coerce(x)


def denominator_of(x):
    """An element ``d`` of the source ring with ``d*x`` free of denominators.

    Used by the lattice search: scaling a basis vector by ``d`` clears the
    offending entry.
    """
    ring = x.ring
    if isinstance(ring, Rationals):
        return ring.from_int(x.data.denominator)
    if isinstance(ring, CyclotomicField):
        from math import lcm

        d = 1
        for c in x.data:
            d = lcm(d, c.denominator)
        return ring.from_int(d)
    if isinstance(ring, FractionField):
        num, den = _integral_fraction(dict(x.data[0]), dict(x.data[1]))
        return Scalar(ring, ring._make(den, polys.const(1, ring.nvars)))
    return ring.one()
