import pytest

from grdecomp.errors import NotGradable, NotSplit
from grdecomp.exact import QQ
from grdecomp.graded import ModuleRep, direct_sum, regular_module, shift, validate_module
from grdecomp.simples import (
    check_split,
    commutant_dimension,
    composition_factors,
    compute_simples,
    grade_simple,
    graded_composition_factors,
    graded_multiplicities,
    radical,
)


def test_exterior_radical_and_simples(fx):
    alg = fx("exterior").algebra
    assert len(radical(alg)) == alg.dim - 1
    S = compute_simples(alg)
    assert [L.dim for L in S] == [1] and S.labels == ["L1"]
    assert check_split(alg)


def test_semisimple_hecke_at_generic_point(fx):
    s = fx("hecke_s2")
    alg = s.specialization("v1").algebra(s.algebra)
    S = compute_simples(alg)
    assert len(S) == 2 and not radical(alg)
    assert sum(L.dim ** 2 for L in S) == alg.dim


def test_s3_simples_are_absolutely_irreducible(fx):
    s = fx("hecke_s3_e3")
    alg = s.specialization("zeta3").algebra(s.algebra)
    S = compute_simples(alg)
    assert [L.dim for L in S] == [1, 1]
    for L in S:
        assert validate_module(L).ok
    assert sum(L.dim ** 2 for L in S) == alg.dim - len(radical(alg))


def test_nonsplit(fx):
    alg = fx("nonsplit_rotation").algebra
    assert not check_split(alg)
    with pytest.raises(NotSplit):
        compute_simples(alg)


def test_regular_module_factors(fx):
    s = fx("fermion")
    alg = s.specialization("a0").algebra(s.algebra)
    facs = graded_composition_factors(regular_module(alg))
    assert sorted(min(m.degrees) for m in facs) == [-1, 0, 0, 1]
    S = compute_simples(alg)
    cls = graded_multiplicities(regular_module(alg), S)
    assert cls[S.labels[0]].coeffs == {-1: 1, 0: 2, 1: 1}
    assert composition_factors(regular_module(alg), S) == {"L1": 4}


def test_graded_multiplicities_char_p(fx):
    s = fx("fermion")
    alg = s.specialization("a0p").algebra(s.algebra)
    S = compute_simples(alg)
    reg = direct_sum(regular_module(alg), regular_module(alg))
    cls = graded_multiplicities(shift(reg, 1), S)
    # characters alone would only give these mod 2
    assert cls["L1"].coeffs == {0: 2, 1: 4, 2: 2}


def test_grade_simple(fx):
    s = fx("fermion")
    V = s.module("V")
    ungraded = ModuleRep(V.algebra, V.field, V.action, "V")
    g = grade_simple(ungraded)
    assert list(g.degrees) == [0, 1]
    bad = ModuleRep(
        V.algebra, QQ, [[[QQ(1) if r == c else QQ(0) for c in range(2)] for r in range(2)]] * 4, "bad"
    )
    with pytest.raises(NotGradable):
        grade_simple(bad)


def test_s3_generic_simples(fx):
    # over K the radical vanishes, so End = K forces simplicity
    s = fx("hecke_s3_e3")
    K = s.modules[0].field
    alg = s.algebra.map_coefficients(K.coerce, K)
    assert radical(alg) == []
    assert [m.dim for m in s.modules] == [1, 1, 2]
    assert all(commutant_dimension(m) == 1 for m in s.modules)
    assert sum(m.dim ** 2 for m in s.modules) == alg.dim
