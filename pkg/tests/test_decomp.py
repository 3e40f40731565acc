from grdecomp.decomp import (
    decomposition_matrix,
    evaluate_q1,
    factorization_check,
    matmul_q,
    verify_diagram,
)
from grdecomp.exact.laurent import LaurentPoly


def test_fermion_char_p_matrix(fx):
    s = fx("fermion")
    D = decomposition_matrix(s.specialization("a0p"), s.modules)
    assert D.entries == [[LaurentPoly("q", {0: 1, 1: 1})]]
    assert D.to_json()["matrix"] == [[{"0": 1, "1": 1}]]
    assert "grading_normalization" in D.metadata


def test_fermion_tower(fx):
    s = fx("fermion")
    rep = factorization_check(s.tower("t1"), s.modules)
    assert rep.product == rep.D_theta_prime.entries


def test_tower_through_identity(fx):
    h = fx("hecke_s2_tower")
    rep = factorization_check(h.tower("same"), h.modules)
    one, zero = LaurentPoly("q", {0: 1}), LaurentPoly("q")
    assert rep.D_phi.entries == [[one, zero], [zero, one]]


def test_s3_matrix_values(fx):
    s = fx("hecke_s3_e3")
    D = decomposition_matrix(s.specialization("zeta3"), s.modules)
    q1 = evaluate_q1(D)
    assert sorted(map(tuple, q1)) == [(0, 1), (1, 0), (1, 1)]
    assert D.row_labels[-1] == "refl"


def test_matmul_q():
    q = lambda d: LaurentPoly("q", d)  # noqa: E731
    assert matmul_q([[q({1: 1}), q({0: 1})]], [[q({0: 1})], [q({-1: 2})]]) == [[q({1: 1, -1: 2})]]


def test_diagram_on_prescaled_module(fx):
    from grdecomp.specialize import rescale

    s = fx("fermion")
    V = s.module("V")
    K = V.field
    pre = rescale(V, [K.gen("a").inverse(), K.one()])
    for spec in ("a0", "a0p"):
        assert verify_diagram(s.specialization(spec), [pre], depth=3).ok
