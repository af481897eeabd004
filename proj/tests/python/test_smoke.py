import json

import pytest

import twistlab


def test_zoo_round_trip_validates():
    assert "zigzag3" in twistlab.zoo_names()
    assert twistlab.validate(twistlab.zoo_emit("zigzag3")) == []


def test_broken_algebra_reports_associativity():
    doc = json.loads(twistlab.zoo_emit("zigzag3"))
    doc["mult"] = [m for m in doc["mult"] if not (m["left"] == "x1" and m["right"] == "e1")]
    kinds = {v[0] for v in twistlab.validate(json.dumps(doc))}
    assert "associativity" in kinds


def test_malformed_json_raises():
    with pytest.raises(ValueError):
        twistlab.validate("{ not json")


def test_hom_dims_and_twist():
    assert twistlab.hom_dims("zigzag3", "P1", "P1") == {0: 1, 2: 1}
    assert twistlab.hom_dims("zigzag3", "P1", "P3") == {}
    # T_P1 P3 = P3 on every projective profile
    assert twistlab.twist_dims("zigzag3", "stwist:P1", "P3", 3) == twistlab.twist_dims("zigzag3", "id", "P3")


def test_entropy_lambda2_is_minus_t():
    rep = twistlab.entropy("lambda2", n_max=6)
    for s in rep["summaries"]:
        assert s["h_tailfit"] == pytest.approx(-s["t"], abs=1e-9)
        assert s["verdict"] == "within-envelope"
    assert rep["csv"].startswith("t,n,eps")


def test_ktheory_charpoly():
    doc = json.loads(twistlab.ktheory("zigzag3"))
    assert doc["charpoly"] == "x^3 - x^2 - x + 1"
    assert twistlab.charpoly([[-1, 1, 0], [0, 1, 0], [0, 0, 1]]) == [1, -1, -1, 1]


def test_fekete_geometric():
    first, second = twistlab.fekete_limit([2.0**n for n in range(1, 41)])
    assert first == pytest.approx(0.6931471805599453)
    assert second <= max(0.0, first) + 1e-6


def test_bad_instance_raises():
    with pytest.raises(Exception):
        twistlab.entropy("nope")
