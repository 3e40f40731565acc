from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grdecomp.errors import (
    ExpressionSyntaxError,
    InexactDivision,
    NonInvertibleDenominator,
    NonSquare,
    UndeclaredVariable,
)
from grdecomp.exact import (
    QQ,
    ZZ,
    CyclotomicField,
    FractionField,
    LaurentPoly,
    PolynomialRing,
    PrimeField,
    charpoly,
    cyclotomic_poly,
    hom_apply,
    parse_scalar,
)
from grdecomp.exact import linalg
from grdecomp.exact.factor import factor

LQ = PolynomialRing(QQ, ("v",), laurent=True)
LZ = PolynomialRing(ZZ, ("v",), laurent=True)
PQ = PolynomialRing(QQ, ("v",))
FQ = FractionField(PQ)
FLZ = FractionField(LZ)
Z3 = CyclotomicField(3)


# ---------------------------------------------------------------- parsing


def test_parse_laurent_difference():
    x = parse_scalar("v^2 - 1", LQ)
    assert dict(x.data) == {(2,): 1, (0,): -1}


@pytest.mark.parametrize("ring", [ZZ, QQ, LQ, PQ, FQ, Z3, PrimeField(5)])
def test_parse_zero_is_canonical(ring):
    assert parse_scalar("0", ring) == ring.zero()
    assert parse_scalar("0", ring).data == ring.zero().data


def test_parse_fraction_reduces():
    x = parse_scalar("(v-1)/(v+1)", FQ)
    # oracle: multiplying back by the denominator gives the numerator
    assert x * parse_scalar("v+1", FQ) == parse_scalar("v-1", FQ)
    assert str(FQ.denominator(x)) == "v + 1"
    y = parse_scalar("(v^2-1)/(v^2+2v+1)", FQ)
    assert y == x and y.data == x.data


def test_parse_grammar_extras():
    assert parse_scalar("-v + 2v^-1", LZ) == LZ.gen("v") * -1 + LZ.gen("v") ** -1 * 2
    assert parse_scalar("2(v+1)", LZ) == parse_scalar("2*v + 2", LZ)
    assert parse_scalar("z^2", Z3) == parse_scalar("-z - 1", Z3)


@pytest.mark.parametrize("text", ["v +", "(v", "v ^ x", "3 $ 4", "", "v^"])
def test_parse_syntax_errors(text):
    with pytest.raises(ExpressionSyntaxError):
        parse_scalar(text, LQ)


def test_parse_undeclared_variable():
    with pytest.raises(UndeclaredVariable):
        parse_scalar("w + 1", LQ)


def test_parse_inexact_division():
    with pytest.raises(InexactDivision):
        parse_scalar("1/(v+1)", LZ)
    with pytest.raises(InexactDivision):
        parse_scalar("1/2", ZZ)
    assert parse_scalar("(v^2-1)/(v-1)", LZ) == parse_scalar("v+1", LZ)
    with pytest.raises(InexactDivision):
        parse_scalar("v/v", LZ, allow_division=False)


laurent_terms = st.dictionaries(st.integers(-3, 3), st.integers(-6, 6), max_size=4)


def _laurent(ring, terms):
    return ring.from_exponent_map({(k,): c for k, c in terms.items() if c})


@given(laurent_terms, laurent_terms.filter(lambda d: any(d.values())))
def test_round_trip_fraction_field(num, den):
    x = FLZ.coerce(_laurent(LZ, num)) / FLZ.coerce(_laurent(LZ, den))
    assert parse_scalar(str(x), FLZ) == x


@given(st.lists(st.fractions(max_denominator=9).map(lambda f: Fraction(f.numerator % 50, f.denominator)), min_size=2, max_size=2))
def test_round_trip_cyclotomic(coeffs):
    x = Z3.from_coeffs(coeffs)
    assert parse_scalar(str(x), Z3) == x


@given(laurent_terms)
def test_round_trip_laurent(terms):
    x = _laurent(LZ, terms)
    assert parse_scalar(str(x), LZ) == x


# ---------------------------------------------------------------- cyclotomic polynomials


def _long_division(num, den):
    """Quotient and remainder of integer polynomials (coefficients low to high)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    return q, num


def _coeffs(e):
    p = cyclotomic_poly(e)
    n = max(k[0] for k, _ in p.data)
    d = dict(p.data)
    return [int(d.get((i,), 0)) for i in range(n + 1)]


def test_cyclotomic_examples():
    assert _coeffs(1) == [-1, 1]
    assert _coeffs(6) == [1, -1, 1]
    # oracle: (x^4 - 1) / (Phi_1 Phi_2) by long division
    q, r = _long_division([-1, 0, 0, 0, 1], [-1, 0, 1])
    assert not any(r) and q == _coeffs(4) == [1, 0, 1]


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("e", range(1, 25))
def test_cyclotomic_product_formula(e):
    prod = [1]
    for d in range(1, e + 1):
        if e % d == 0:
            prod = _mul(prod, _coeffs(d))
    assert prod == [-1] + [0] * (e - 1) + [1]
    _, r = _long_division([-1] + [0] * (e - 1) + [1], _coeffs(e))
    assert not any(r)


def test_cyclotomic_field_arithmetic():
    z = Z3.gen("z")
    assert z ** 3 == Z3.one() and z != Z3.one()
    assert z * z.inverse() == Z3.one()
    i = CyclotomicField(4).gen("z")
    assert i * i == -CyclotomicField(4).one()


# ---------------------------------------------------------------- hom_apply


def test_hom_examples():
    assert hom_apply({"v": QQ.one()}, parse_scalar("v^2-1", LQ)) == QQ.zero()
    ra = PolynomialRing(QQ, ("a",))
    assert hom_apply({"a": QQ.zero()}, parse_scalar("3a+2", ra)) == QQ(2)
    with pytest.raises(NonInvertibleDenominator):
        hom_apply({"v": QQ.one()}, parse_scalar("1/(v-1)", FQ))


def test_hom_char_p_uses_integral_denominators():
    F2 = PrimeField(2)
    x = parse_scalar("(v+1)/2", FLZ)
    with pytest.raises(NonInvertibleDenominator):
        hom_apply({"v": F2.one()}, x)
    y = parse_scalar("(v^2-1)/(2v-2)", FLZ)  # = (v+1)/2 again
    with pytest.raises(NonInvertibleDenominator):
        hom_apply({"v": F2.one()}, y)
    assert hom_apply({"v": PrimeField(3).one()}, y) == PrimeField(3)(1)


TARGETS = [
    ({"v": QQ(2)}, QQ),
    ({"v": QQ(-1)}, QQ),
    ({"v": PrimeField(5)(3)}, PrimeField(5)),
    ({"v": Z3.gen("z")}, Z3),
]


@settings(max_examples=60)
@given(laurent_terms, laurent_terms, st.sampled_from(range(len(TARGETS))))
def test_hom_is_ring_morphism(t1, t2, k):
    ass, target = TARGETS[k]
    x, y = _laurent(LZ, t1), _laurent(LZ, t2)
    h = lambda a: hom_apply(ass, a, target)  # noqa: E731
    assert h(x + y) == h(x) + h(y)
    assert h(x * y) == h(x) * h(y)
    assert h(LZ.one()) == target.one()


@settings(max_examples=40)
@given(laurent_terms, laurent_terms, laurent_terms.filter(lambda d: any(d.values())))
def test_hom_on_fractions_is_multiplicative(t1, t2, t3):
    ass = {"v": QQ(2)}
    den = _laurent(LZ, t3)
    if hom_apply(ass, den, QQ) == 0:
        return
    x = FLZ.coerce(_laurent(LZ, t1)) / FLZ.coerce(den)
    y = FLZ.coerce(_laurent(LZ, t2))
    assert hom_apply(ass, x * y, QQ) == hom_apply(ass, x, QQ) * hom_apply(ass, y, QQ)


# ---------------------------------------------------------------- charpoly


def _leibniz_det(m, ring):
    n = len(m)
    total = ring.zero()
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = ring.one()
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term * sign
    return total


def test_charpoly_examples():
    z = QQ.zero()
    assert charpoly([[z, z], [z, z]], QQ) == LaurentPoly("X", {2: QQ.one()})
    one = QQ.one()
    eye = linalg.identity(QQ, 3)
    X = LaurentPoly("X", {1: one})
    assert charpoly(eye, QQ) == (X - one) ** 3
    Fa = FractionField(PolynomialRing(QQ, ("a",)))
    a = Fa.gen("a")
    assert charpoly([[Fa.zero(), a], [Fa.zero(), Fa.zero()]], Fa) == LaurentPoly("X", {2: Fa.one()})


def test_charpoly_rejects_non_square():
    with pytest.raises(NonSquare):
        charpoly([[QQ.one(), QQ.one()]], QQ)


matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=60)
@given(matrices, st.sampled_from([QQ, PrimeField(7), Z3]))
def test_charpoly_against_leibniz(rows, ring):
    m = [[ring.from_int(x) for x in r] for r in rows]
    if ring is Z3:
        m[0][0] = m[0][0] + Z3.gen("z")
    n = len(m)
    p = charpoly(m, ring)
    assert p.degree == n and p[n] == ring.one()
    # oracle: det(c I - m) by permutation expansion at several points c
    for c in range(-2, 3):
        shifted = [[(ring.from_int(c) if i == j else ring.zero()) - m[i][j] for j in range(n)] for i in range(n)]
        assert p.evaluate(ring.from_int(c)) == _leibniz_det(shifted, ring)
    assert (p[0] or ring.zero()) == _leibniz_det(m, ring) * (-1) ** n
    assert (p[n - 1] or ring.zero()) == -linalg.trace(m, ring)


# ---------------------------------------------------------------- factorization


def test_factor_over_cyclotomic_and_prime_fields():
    z = Z3.gen("z")
    X = LaurentPoly("X", {1: Z3.one()})
    facs = factor((X - z) * (X - Z3.one()) * (X * X + Z3.one()), Z3)
    assert sorted(f.degree for f, _ in facs) == [1, 1, 2]
    F2 = PrimeField(2)
    facs = factor(LaurentPoly("X", {2: F2.one(), 0: F2.one()}), F2)
    assert facs == [(LaurentPoly("X", {1: F2.one(), 0: F2.one()}), 2)]
