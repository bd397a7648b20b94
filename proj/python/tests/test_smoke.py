import math

import pytest

import alphaidx as ai


def test_regular_and_path_values():
    rho, vec = ai.perron(ai.complete(5), 0.3)
    assert rho == pytest.approx(4.0, abs=1e-12)
    assert all(x > 0 for x in vec)
    assert ai.alpha_index(ai.path(6), 0.0) == pytest.approx(2 * math.cos(math.pi / 7), abs=1e-10)
    assert ai.rho_complete_minus_edge(4, 0.0) == pytest.approx((1 + math.sqrt(17)) / 2, abs=1e-12)


def test_graph6_round_trip():
    g = ai.Graph.from_graph6("C~")
    assert g == ai.complete(4)
    assert ai.bug(6, 3, 5).order == 12
    assert ai.Graph.from_graph6(ai.bug(6, 3, 5).graph6()) == ai.bug(6, 3, 5)
    with pytest.raises(ValueError):
        ai.Graph.from_graph6("C~~")


def test_oracle_agreement():
    g = ai.bug(5, 3, 2)
    assert ai.perron(g, 0.4)[0] == pytest.approx(ai.perron_oracle(g, 0.4)[0], abs=1e-9)


def test_enumeration_counts():
    assert len(ai.enumerate_connected(5)) == 21
    assert len(ai.enumerate_trees(6)) == 6


def test_diameter_theorem_report():
    report = ai.verify_diameter_theorem(6, 4, 0.0)
    assert report["claim"] == "diameter"
    assert report["violations"] == []
    assert ai.is_isomorphic(ai.Graph.from_graph6(report["extremal_witness"]), ai.bug(4, 2, 2))


def test_hypothesis_errors():
    with pytest.raises(ai.HypothesisError):
        ai.gamma(1.5, 0.0)
    with pytest.raises(ValueError):
        ai.scan_conjecture2(ai.complete(2), 0, 1, 8, [0.0])


def test_question1_finds_reversals():
    records = ai.search_question1_reversal(6, [0.0])
    assert any(r["direction"] == "reversed" and r["oracle_confirmed"] for r in records)
