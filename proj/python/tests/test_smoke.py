import math

import pytest

import cohom1


def test_round_sphere_values():
    b = cohom1.eval_profile("S4", math.pi / 6)
    assert b["f"] == pytest.approx((1.0, 1.0, 4.0), abs=1e-13)


def test_weyl_orders():
    assert cohom1.weyl_order("S4") == 6
    assert cohom1.weyl_order("CP2") == 4
    assert cohom1.weyl_order("S7") == 12
    assert cohom1.weyl_order("B7") == 6
    assert cohom1.weyl_order("E_p", p=7) == 4
    assert cohom1.weyl_order("W2") == 8


def test_collapse_directions():
    dirs = cohom1.collapse_directions("S7", "minus")
    assert dirs == [(1, -3, 1, pytest.approx(0.0, abs=1e-12))]


def test_oracles_match_closed_forms():
    t = 0.37
    closed = cohom1.eval_profile("B7", t)
    oracle = cohom1.b7_action_norms(t)
    assert oracle[0] == pytest.approx(closed["f"][0], abs=1e-13)
    assert oracle[1] == pytest.approx(closed["g"][0], abs=1e-13)
    assert oracle[2] == pytest.approx(closed["h"][0], abs=1e-13)

    esch = cohom1.eschenburg_oracle(2, 0.5, t)
    closed_e = cohom1.eval_profile("E_p", t, p=2, eps=0.5)
    assert esch["f"][0] == pytest.approx(closed_e["f"][0], abs=1e-10)


def test_hitchin_corner_values_and_slopes():
    assert cohom1.eval_hitchin(4, 1.0) == pytest.approx((0.0, 1 / 9, 1 / 9, 1 / 27), abs=1e-13)
    an = cohom1.Hitchin(4)
    assert an.L > 0
    assert an.sphere_h_prime(0.0) == pytest.approx(1.0, abs=1e-6)
    assert an.sphere_h_prime(3 * an.L) == pytest.approx(-0.25, abs=1e-6)
    assert an.total_curvature() == pytest.approx(2 * math.pi * 1.25, rel=0.01)


def test_classification_families():
    assert cohom1.enumerate_family("ex2", 10) == []
    labels = {s["label"] for s in cohom1.enumerate_family("ex4", 10)}
    assert labels == {"B7", "P_1", "P_2", "P_3", "P_4"}
    assert cohom1.lemma_ab(2, 1, 2)
    assert not cohom1.lemma_c(3, 5, 2, 7)
