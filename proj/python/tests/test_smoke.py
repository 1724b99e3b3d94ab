import json
from pathlib import Path

import pytest

import woideal

DATA = Path(__file__).resolve().parents[2] / "data"


def path123():
    return woideal.Graph([("x1", 1), ("x2", 2), ("x3", 2)], [("x1", "x2"), ("x2", "x3")])


def test_graph_accessors():
    g = path123()
    assert len(g) == 3
    assert g.names == ["x1", "x2", "x3"]
    assert g.weights == [1, 2, 2]
    assert g.arcs == [("x1", "x2"), ("x2", "x3")]


def test_json_round_trip():
    g = woideal.Graph.load(str(DATA / "figure1.json"))
    again = woideal.Graph.from_json(g.to_json())
    assert again.names == g.names
    assert again.weights == g.weights
    assert again.arcs == g.arcs


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError, match="weight"):
        woideal.Graph([("x1", 2), ("x2", 1)], [("x1", "x2")])
    with pytest.raises(woideal.InvalidInput, match="unknown vertex"):
        woideal.Graph.from_json('{"vertices":[{"name":"x1"}],"arcs":[["x1","x9"]]}')


def test_edge_ideal_and_covers():
    g = path123()
    assert woideal.edge_ideal(g) == [{"x1": 1, "x2": 2}, {"x2": 1, "x3": 2}]
    assert woideal.minimal_vertex_covers(g) == [["x2"], ["x1", "x3"]]
    covers = woideal.strong_vertex_covers(g)
    assert [c["cover"] for c in covers] == [["x2"], ["x1", "x3"], ["x2", "x3"]]
    assert covers[2]["L3"] == ["x3"]


def test_decomposition_is_verified():
    report = woideal.primary_decomposition(path123())
    assert report["intersection_verified"] is True
    assert [c["generators"] for c in report["components"]] == [
        [{"x2": 1}],
        [{"x1": 1}, {"x3": 2}],
        [{"x2": 2}, {"x3": 2}],
    ]


def test_figure1_classification():
    g = woideal.Graph.load(str(DATA / "figure1.json"))
    report = woideal.classify(g)
    assert report["applicable_via"] == "chordal"
    assert report["unmixed"] is True
    assert report["cohen_macaulay"] is True
    assert (report["m"], report["height"], report["dimension"]) == (3, 7, 3)
    assert woideal.system_of_parameters(g) == ["x1+x2+x3+x4", "x5+x6+x7", "x8+x9+x10"]
    assert woideal.simplex_partition(g) == [["x1", "x2", "x3", "x4"], ["x5", "x6", "x7"], ["x8", "x9", "x10"]]


def test_mixed_path_has_no_parameters():
    g = path123()
    assert woideal.is_unmixed(g) is False
    with pytest.raises(ValueError):
        woideal.system_of_parameters(g)


def test_chordality_witness():
    c4 = woideal.Graph.load(str(DATA / "c4.json"))
    result = woideal.is_chordal(c4)
    assert result["chordal"] is False
    assert len(result["induced_cycle"]) == 4


def test_oracle_agrees_and_caps():
    report = woideal.oracle_verify(path123())
    assert report["fields"]["F2"]["cohen_macaulay"] is False
    assert report["fields"]["Q"]["cohen_macaulay"] is False
    assert report["mismatch"] is False
    figure1 = woideal.Graph.load(str(DATA / "figure1.json"))
    with pytest.raises(woideal.CapacityError):
        woideal.oracle_verify(figure1)


def test_small_census_is_clean_and_deterministic():
    first = woideal.census(max_n=3, seed=7)
    second = woideal.census(max_n=3, seed=7)
    assert first["counts"]["mismatches"] == 0
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
