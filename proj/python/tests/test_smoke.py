from fractions import Fraction

import pytest

import csglab


def test_two_link_ratios():
    doc = csglab.two_link(5)
    report = csglab.analyze(doc)
    assert report["ratios"]["PoA_sc"]["exact"] == "5/1"
    assert report["ratios"]["PoA_mc"]["exact"] == "5/1"
    assert all(v["holds"] for v in report["verdicts"])
    assert csglab.classify(doc) == "ParallelLink"


def test_costs_are_fractions():
    doc = csglab.fig2(1, 2)
    good = [[0, 2, 6], [1, 5]]
    bad = [[0, 3, 5], [1, 4, 6]]
    assert csglab.sum_cost(doc, good) == 5
    assert csglab.max_cost(doc, good) == 3
    assert csglab.sum_cost(doc, bad) == 8
    assert csglab.agent_cost(doc, bad, 0) == 4
    assert isinstance(csglab.potential(doc, bad), Fraction)
    assert csglab.is_nash(doc, bad)
    assert csglab.best_response(doc, bad, 0) is None


def test_dynamics_and_constructive():
    doc = csglab.fig3(4, "1/100")
    trace = csglab.dynamics(doc)
    assert trace["terminal_sum_cost"] == "13/4"
    potentials = [csglab.rational(trace["start_potential"])]
    potentials += [csglab.rational(s["potential_after"]) for s in trace["steps"]]
    assert all(a > b for a, b in zip(potentials, potentials[1:]))
    again = csglab.dynamics(doc, start=trace["terminal"])
    assert again["step_count"] == 0
    result = csglab.constructive(csglab.two_link(3))
    assert csglab.rational(result["max_cost"]) <= 3


def test_round_trip_and_errors():
    doc = csglab.random_sp(7, 3)
    assert csglab.normalize(doc) == doc
    asym = csglab.random_asym(7, 2)
    assert csglab.classify(asym) == "Dag"
    with pytest.raises(csglab.ParameterViolation):
        csglab.fig2(1, 1)
    broken = csglab.two_link(2)
    broken["edges"][0]["cost"] = "1/0"
    with pytest.raises(csglab.ParseError):
        csglab.analyze(broken)
    with pytest.raises(csglab.PathExplosion):
        csglab.analyze(csglab.fig3(5, "1/10"), cap=10)


def test_feasible_extension():
    doc = csglab.two_link(2)
    path = csglab.feasible_extension(doc, [[0], [1]], [[0]])
    assert path in ([0], [1])


def test_verify_suite():
    results = csglab.verify()
    assert len(results) == 8
    assert all(r["passed"] for r in results), [r["detail"] for r in results if not r["passed"]]
