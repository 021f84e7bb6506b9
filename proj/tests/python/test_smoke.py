import json
import pathlib

import pytest

import nilgraph

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_figure1_components():
    r = nilgraph.analyze(load("figure1.json"))
    assert sorted(map(sorted, r["components"])) == [["v1", "v2"], ["v3", "v4"], ["v5"], ["v6"]]
    assert r["quotient"]["sizes"] == [2, 2, 1, 1]
    assert r["hirsch"] == 12


def test_counterexample_check():
    g = load("counterexample.json")
    B = load("counterexample_B.json")["B"]
    r = nilgraph.check(g, B)
    assert r["valid"] and r["finite"]
    assert r["C"][6] == [0, 0, 0, 0, 0, 0, 0, -1]
    weighted = nilgraph.check(load("counterexample_k2.json"), B)
    assert not weighted["valid"] and weighted["gate"] == "integrality"


def test_automorphisms_and_certificate():
    g = load("counterexample_k2.json")
    a = nilgraph.automorphisms(g)
    assert (a["order"], a["weighted_order"]) == (16, 8)
    cert = nilgraph.certify(g)
    assert cert["kind"] == "pinned_edge"
    assert nilgraph.verify_certificate(cert)["ok"]
    cert["pinned_edge"] = ["v1", "v7"]
    assert not nilgraph.verify_certificate(cert)["ok"]


def test_bounds_and_search():
    assert nilgraph.bounds(load("k2.json")) == (4, 4)
    assert nilgraph.bounds(load("p4.json")) == (2, 3)
    r = nilgraph.search(load("k2.json"))
    assert r["found"] and r["B"] == [[1, 1], [1, 0]] and r["C"] == [[-1]]
    assert not nilgraph.search(load("p4.json"))["found"]


def test_linear_algebra():
    r = nilgraph.smith_normal_form([[2, 4], [6, 8]])
    assert r["S"] == [[2, 0], [0, 4]]
    assert nilgraph.char_poly([[2, 1], [1, 1]])["text"] == "x^2 - 3x + 1"


def test_group_multiplication():
    h1 = {"n": 2, "m": 1, "c": [[1, 2, 1, 1]]}
    assert nilgraph.multiply(h1, {"z": [0, 1], "t": [0]}, {"z": [1, 0], "t": [0]}) == {"z": [1, 1], "t": [-1]}
    H = nilgraph.remark_group_H()
    assert H["n"] == 4 and H["m"] == 3


def test_errors():
    with pytest.raises(nilgraph.PreconditionError):
        nilgraph.certify({"vertices": ["v1", "v2"], "edges": [["v1", "v2", 3]]})
    with pytest.raises(ValueError):
        nilgraph.analyze({"edges": []})


@pytest.mark.parametrize("example", ["figure1", "heisenberg", "main-counterexample", "remark-quadext", "remark-H-finiteR", "path4"])
def test_reproduce(example):
    assert nilgraph.reproduce(example)["ok"]
