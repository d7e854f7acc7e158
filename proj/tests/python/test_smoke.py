"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

acb = pytest.importorskip("acb")


def test_feasible():
    assert acb.feasible(["1/6", "1/3", "1/2"], "1", 3)
    assert not acb.feasible(["1/2", "1/4", "1/4"], "1", 3)


def test_pure_payoff():
    assert acb.payoff_pure(["3/10", "7/10"], "1", ["1/5", "2/5"], "3/5") == "1"
    assert acb.payoff_pure(["1/5", "4/5"], "1", ["1/5", "2/5"], "3/5") == "3/4"


def test_values():
    assert acb.w2_value("3/4") == "3/4"
    assert acb.w2_value("9/10") == "3/5"
    assert acb.w2_value("1") == "1/2"
    assert acb.w3_value("5/9") == ("Known", "8/9")
    assert acb.w3_value("19/32") == ("Unknown", None)
    assert acb.w3_value("2/3") == ("UpperBound", "4/5")


def test_equilibrium_and_payoff():
    eq = acb.w2_equilibrium_dict("3/4")
    assert eq["k"] == 1
    assert eq["epsilon"] == "3/16"
    import json

    value = acb.payoff_mixed(json.dumps(eq["pa"]), json.dumps(eq["pb"]))
    assert value == "3/4"
    assert acb.exploitability(json.dumps(eq["pa"]), json.dumps(eq["pb"])) == (
        "0",
        "0",
    )


def test_best_response_against_fixed_strategy():
    br = acb.best_response_dict(acb.fixed_strategy("5.4-B"), "1")
    assert br["sup_payoff"] == "4/5"
    assert br["attained"] is True
    assert len(br["witness"]) == 3


def test_marginals():
    assert acb.marginal_cdf(2, "1/3") == "1/2"
    assert Fraction(acb.payoff_vs_triangle(["0", "0", "1"])) == Fraction(1, 3)


def test_sampler_determinism():
    a = acb.sample_triangle(100, seed=42, depth=1)
    b = acb.sample_triangle(100, seed=42, depth=1)
    assert a == b
    for x1, x2, x3 in a[:10]:
        assert Fraction(x1) + Fraction(x2) + Fraction(x3) == 1
        assert Fraction(x1) <= Fraction(x2) <= Fraction(x3)
    assert acb.empirical_sup_distance(a, 1) <= 0.25


def test_discrete_solver():
    assert acb.discrete_value("1", "1", 3, 6) == "1/2"
    exact = Fraction(acb.discrete_value("1", "2/3", 2, 6))
    report = acb.solve_discrete_dict("1", "2/3", 2, 6, "fp")
    assert abs(Fraction(report["value"]) - exact) <= Fraction(1, 10000)
    assert acb.enumerate_grid_strategies(2, 2) == [[0, 2], [1, 1]]


def test_w3_equilibrium_handles():
    assert acb.w3_equilibrium_dict("19/32") is None
    assert acb.w3_equilibrium_dict("1")["kind"] == "triangle-family"
    eq = acb.w3_equilibrium_dict("5/9")
    assert eq["kind"] == "finite"
    with pytest.raises(ValueError):
        acb.check_w3_family(acb.fixed_strategy("5.5-A"), "5/8")


def test_strategy_helper_and_critical_levels():
    pa = acb.strategy(1, [(("1/3", "2/3"), 1)])
    pb = acb.strategy("1/2", [((Fraction(1, 4), Fraction(1, 4)), 1)])
    assert acb.payoff_mixed(pa, pb) == "1"
    levels = acb.critical_levels(pb)
    assert levels == [["0", "1/4"], ["0", "1/4"]]


def test_verify():
    report = acb.verify_dict("5.5", samples=1000, seed=7)
    assert report["overall"] is True
    assert acb.claim_ids()[0] == "2.1"
