import copy

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grdecomp.errors import AlgebraMismatch, FieldMismatch
from grdecomp.exact import QQ
from grdecomp.exact.laurent import LaurentPoly
from grdecomp.fixtures import fixture_data
from grdecomp.graded import (
    GradedClass,
    direct_sum,
    extend_scalars,
    regular_module,
    shift,
    validate_algebra,
    validate_module,
    zero_module,
)
from grdecomp.session import session_from_dict


def test_fixtures_validate(fx):
    from grdecomp.fixtures import NAMES

    for name in NAMES:
        for rep in fx(name).validation_reports():
            assert rep.ok, str(rep)


def _broken(name, mutate):
    data = copy.deepcopy(fixture_data(name))
    mutate(data)
    return session_from_dict(data, validate=False)


def test_grading_violation_is_located():
    s = _broken("fermion", lambda d: d["algebra"]["products"].__setitem__("x*y", {"x": "1"}))
    rep = validate_algebra(s.algebra)
    assert "grading" in rep.kinds()
    assert any(v.where == "(x,y)" for v in rep.violations)


def test_associativity_violation():
    def mutate(d):
        d["algebra"]["products"]["y*x"] = {"1": "a"}

    rep = validate_algebra(_broken("fermion", mutate).algebra)
    assert "associativity" in rep.kinds()


def test_module_homogeneity_and_representation():
    def mutate(d):
        d["modules"][0]["action"]["x"] = [["0", "1"], ["1", "0"]]

    s = _broken("fermion", mutate)
    rep = validate_module(s.modules[0])
    assert {"homogeneity", "representation"} <= rep.kinds()
    assert "x[1,2]" in str(rep)


def test_regular_module_is_valid(fx):
    alg = fx("exterior").algebra
    assert validate_module(regular_module(alg)).ok


def test_direct_sum_mismatches(fx):
    V = fx("fermion").module("V")
    T = fx("exterior").modules[0]
    with pytest.raises(AlgebraMismatch):
        direct_sum(V, T)
    h = fx("hecke_s3_e3")
    theta = h.specialization("zeta3")
    M = h.modules[0]
    L = extend_scalars(M, theta.target, {"v": theta.target.gen("z")})
    with pytest.raises((FieldMismatch, AlgebraMismatch)):
        direct_sum(M, L)


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_shift_composes(i, j):
    from grdecomp.fixtures import fixture

    V = fixture("fermion").module("V")
    assert shift(shift(V, i), j).degrees == shift(V, i + j).degrees
    assert shift(V, i).graded_dimension() == V.graded_dimension().shift(i)


def test_direct_sum_graded_dimension(fx):
    V = fx("fermion").module("V")
    W = shift(V, 2)
    assert direct_sum(V, W).graded_dimension() == V.graded_dimension() + W.graded_dimension()
    Z = zero_module(V.algebra, V.field)
    assert direct_sum(Z, V).action == V.action


def test_graded_class_shift_and_at_one():
    c = GradedClass({"L1": LaurentPoly("q", {0: 1, 1: 2})}, ["L1", "L2"])
    assert c.shift(-1)["L1"] == LaurentPoly("q", {-1: 1, 0: 2})
    assert c.at_one() == {"L1": 3, "L2": 0}
    assert c.to_json()["L2"] == {}


def test_map_coefficients_keeps_structure(fx):
    s = fx("hecke_s2")
    theta = s.specialization("v1")
    alg = theta.algebra(s.algebra)
    assert alg.ring == QQ and validate_algebra(alg).ok
