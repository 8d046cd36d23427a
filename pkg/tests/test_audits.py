from fractions import Fraction

import pytest

from delpezzo.audits import (
    CONTRADICTION,
    FAILS,
    IDENTITY,
    audit_conic_bundle_fiber,
    audit_genus_formula,
    audit_k2_f10,
    audit_klein_noether,
    audit_three_points_fiber,
    audit_two_fixed_points,
    f_10_10_1_degree,
    minus_three_codiscrepancy,
    run_all_sweeps,
    sweep_three_points_fiber,
)


def test_constants_are_rederived():
    assert minus_three_codiscrepancy() == Fraction(1, 3)
    assert f_10_10_1_degree() == Fraction(4, 5)


def test_klein_noether_point():
    result = audit_klein_noether(1, 8)
    assert result.verdict == CONTRADICTION
    assert dict(result.steps)["2 - r + m/3"] == "-17/3"
    with pytest.raises(ValueError):
        audit_klein_noether(7, 0)


def test_conic_bundle_fiber_values():
    at_five = audit_conic_bundle_fiber(5)
    assert at_five.verdict == CONTRADICTION
    assert dict(at_five.steps)["-2 + extra + k*alpha"] == "1/3"
    assert dict(audit_conic_bundle_fiber(6).steps)["-2 + extra + k*alpha"] == "2/3"
    # the codiscrepancy bound is load-bearing: alpha = 1/4 flips the sign
    below = audit_conic_bundle_fiber(5, alpha=Fraction(1, 4))
    assert below.verdict == FAILS
    assert dict(below.steps)["-2 + extra + k*alpha"] == "-1/12"


def test_genus_formula_example():
    result = audit_genus_formula(4, 3, 2)
    assert result.verdict == CONTRADICTION
    steps = dict(result.steps)
    assert steps["t^2 - kq"] == "10"
    assert steps["kq(q-2) + 3t - 2"] == "10"
    mismatch = audit_genus_formula(5, 3, 2)
    assert mismatch.verdict == FAILS and mismatch.fails_step == "genus constraint"


def test_genus_formula_no_valid_q_for_degree_one():
    # t = 1 forces kq(q-1) = 0, impossible for q >= 2
    for k in range(1, 61):
        for q in range(2, 6):
            assert k * q * (q - 1) != 0


def test_two_fixed_points_values():
    confirmed = audit_two_fixed_points(8, 8)
    assert confirmed.verdict == CONTRADICTION
    assert dict(confirmed.steps)["1 - (n1-2)/n1 - (n2-2)/n2"] == "-1/2"
    assert audit_two_fixed_points(2, 2).verdict == FAILS
    assert audit_two_fixed_points(10, 12).verdict == CONTRADICTION
    with pytest.raises(ValueError):
        audit_two_fixed_points(7, 8)


def test_three_points_fiber_values():
    assert audit_three_points_fiber(2, 2, 2).verdict == IDENTITY
    ok = audit_three_points_fiber(4, 6, 10)
    assert ok.verdict == IDENTITY
    # (4, 6, 100) violates the bound: 1/2 + 2/3 + 49/50 = 161/75 >= 2
    over = audit_three_points_fiber(4, 6, 100)
    assert over.verdict == FAILS
    assert dict(over.steps)["sum (n_i-2)/n_i"] == "161/75"


def test_three_points_sweep_conclusion():
    result = sweep_three_points_fiber(200)
    assert result.verdict == IDENTITY
    steps = dict(result.steps)
    assert steps["conclusion"] == "n1 = 4 and n2 <= 6"


def test_k2_f10_values():
    assert audit_k2_f10(5).verdict == CONTRADICTION
    assert dict(audit_k2_f10(5).steps)["22 - (22+s) + 4/5"] == "-21/5"
    assert audit_k2_f10(1).verdict == CONTRADICTION
    assert dict(audit_k2_f10(1).steps)["22 - (22+s) + 4/5"] == "-1/5"
    outside = audit_k2_f10(0)
    assert outside.verdict == FAILS
    assert dict(outside.steps)["22 - (22+s) + 4/5"] == "4/5"


def test_all_sweeps_confirm():
    results = run_all_sweeps()
    assert len(results) == 6
    for result in results:
        assert result.verdict in (CONTRADICTION, IDENTITY), result.name
    as_json = [r.to_json_dict() for r in results]
    names = [r["name"] for r in as_json]
    assert names == sorted(names)


def test_every_contradiction_carries_exact_value():
    for result in run_all_sweeps():
        assert result.steps  # at least one evaluated expression
        assert result.assumptions  # geometric inputs are declared
