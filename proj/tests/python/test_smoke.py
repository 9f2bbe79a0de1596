import json
import os

import pytest

import mvcrystal as mv

DATA = os.environ.get("MVCRYSTAL_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def read(name):
    with open(os.path.join(DATA, name)) as fh:
        return fh.read()


def test_hexagon_f1():
    hexagon = mv.BZDatum.constant("A2", -1)
    assert hexagon.is_valid()
    out = hexagon.f(1)
    assert out["1"] == -2 and out["13"] == -2
    assert sorted(out.values).count(-1) == 4
    assert out == mv.BZDatum.from_json(read("fix_a2_prime.json"))
    assert out.f(1, route="string") == hexagon.f(1).f(1)
    assert out.e(1) == hexagon


def test_lusztig_and_string_round_trip():
    hexagon = mv.BZDatum.constant("A2", -1)
    assert hexagon.lusztig([1, 2, 1]) == [1, 1, 1]
    mu_e = hexagon.bottom_vertex()
    assert mv.from_lusztig("A2", [1, 2, 1], [1, 1, 1], mu_e) == hexagon
    p = hexagon.kashiwara([1, 2, 1])
    assert p == [0, 0, 0]
    assert mv.from_string_datum("A2", [1, 2, 1], p, mu_e) == hexagon


def test_top_has_no_raising():
    top = mv.BZDatum.constant("A2", 0)
    assert top.e(1) is None
    assert top.e_star(2) is None


def test_am_sp6():
    p = mv.BZDatum.from_json(read("fix_c3_2.json"))
    rep = p.am(1)
    assert rep["c"] == -1
    assert rep["edge_ok"]
    assert (-2, -3) in rep["plucker_failures"]
    assert not rep["equals_f"]
    assert rep["output"] == mv.BZDatum.from_json(read("fix_c3_prime_2.json"))
    report = mv.sp6_counterexample(2)
    assert report["ok"]
    assert report["n_1m2"] == -3


def test_counts_and_scans():
    assert mv.weyl_order("C3") == 48
    assert mv.crystal_size("A2", [1, 1]) == 8
    graph = json.loads(mv.graph_json("A2", lam=[1, 1]))
    assert len(graph["nodes"]) == 8
    assert mv.amscan("A3", 4)["failures"] == 0


def test_json_round_trip():
    text = read("fix_a2.json")
    assert mv.BZDatum.from_json(text).to_json() == text


def test_errors():
    with pytest.raises(mv.ParseError):
        mv.BZDatum.from_json(read("malformed_key.json"))
    with pytest.raises(mv.UnsupportedType):
        mv.BZDatum.from_json(read("g2.json"))
    with pytest.raises(ValueError):
        mv.crystal_size("A2", [-1, 0])
