import pytest

from grdecomp.errors import (
    FractionFieldMismatch,
    KernelNotNested,
    LatticeNotFound,
    NonUnitAssignment,
    PhiNotDefinedOnB,
    SpecializationError,
)
from grdecomp.exact import QQ, ZZ, CyclotomicField, PolynomialRing, PrimeField
from grdecomp.specialize import (
    check_integrality,
    clear_denominators,
    make_specialization,
    make_tower,
    modular_reduce,
    rescale,
)
from grdecomp.characters import fingerprint

LZ = PolynomialRing(ZZ, ("v",), laurent=True)
LQ = PolynomialRing(QQ, ("v",), laurent=True)


def test_make_specialization_checks():
    with pytest.raises(NonUnitAssignment):
        make_specialization(LZ, QQ, {"v": "0"})
    with pytest.raises(FractionFieldMismatch):
        make_specialization(LQ, PrimeField(3), {"v": "1"})
    with pytest.raises(FractionFieldMismatch):
        make_specialization(LZ, CyclotomicField(3), {"v": "1"})
    with pytest.raises(SpecializationError):
        make_specialization(LZ, QQ, {"w": "1"})
    with pytest.raises(SpecializationError):
        make_specialization(QQ, QQ, {})
    th = make_specialization(LZ, CyclotomicField(6), {"v": "-z"})
    assert th(LZ.gen("v")) ** 3 == CyclotomicField(6).one()


def test_clear_denominators_and_reduce(fx):
    s = fx("fermion")
    theta = s.specialization("a0")
    V = s.module("V")
    K = V.field
    pre = rescale(V, [K.gen("a").inverse(), K.one()])
    lattice, rec = clear_denominators(pre, theta)
    assert not rec.is_identity()
    red = modular_reduce(lattice, theta)
    assert red.field == QQ and red.degrees == V.degrees
    with pytest.raises(LatticeNotFound):
        clear_denominators(pre, theta, max_rounds=0)


def test_integrality_detects_denominators(fx):
    s = fx("hecke_s2")
    M = s.modules[0]
    assert check_integrality(fingerprint(M), s.ring)
    scaled = M.with_degrees(M.degrees)
    K = M.field
    from grdecomp.graded import GradedModuleRep

    action = [[[x / K.from_int(2) if x else x for x in row] for row in a] for a in scaled.action]
    half = GradedModuleRep(M.algebra, K, M.degrees, action, "half")
    assert not check_integrality(fingerprint(half), s.ring)


def test_towers(fx):
    h = fx("hecke_s2_tower")
    t = make_tower(h.specialization("v1"), h.specialization("v1p"), "integers", algebra=h.algebra)
    assert t.phi(QQ(3)) == PrimeField(2).one()
    with pytest.raises(KernelNotNested):
        make_tower(h.specialization("v1"), h.specialization("vm1"), "integers", algebra=h.algebra)
    with pytest.raises(PhiNotDefinedOnB):
        make_tower(h.specialization("v1"), h.specialization("v1p"), "rationals", algebra=h.algebra)
    same = h.tower("same")
    assert same.theta == same.theta_prime
