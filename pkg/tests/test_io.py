import json

import pytest
from hypothesis import given

from bifrm.biframe import bipoint_pairs
from bifrm.bispace import b_omega_fin, d_omega
from bifrm.errors import InvalidInput
from bifrm.frame import frames_isomorphic
from bifrm.harness import enumerate_bispaces
from bifrm.io import (
    biframe_from_json,
    biframe_to_json,
    bispace_from_json,
    bispace_to_json,
    detect_kind,
    dframe_from_json,
    dframe_to_json,
    dumps,
    frame_from_json,
    frame_to_dot,
    frame_to_json,
    load,
    poset_from_json,
    poset_to_json,
)
from bifrm.poset import enumerate_lattices
from bifrm.frame import frame_from_lattice
from strategies import bispaces, posets


@given(posets(4))
def test_poset_roundtrip(poset):
    back = poset_from_json(poset_to_json(poset))
    assert len(back) == len(poset)
    assert poset_to_json(back) == poset_to_json(poset)


def test_frame_formats():
    assert frame_from_json({"chain": 4}).size() == 4
    assert frame_from_json({"boolean": 2}).size() == 4
    v = {"elements": ["a", "b", "c"], "leq": []}
    assert frame_from_json({"poset": v}).size() == 8
    assert frame_from_json({"downsets": v}).size() == 8
    diamond = {"elements": ["0", "a", "b", "1"], "leq": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]}
    assert frames_isomorphic(frame_from_json(diamond), frame_from_json({"boolean": 2}))


def test_frame_roundtrip():
    for lattice in enumerate_lattices(7, distributive_only=True):
        frame = frame_from_lattice(lattice)
        assert frames_isomorphic(frame_from_json(frame_to_json(frame)), frame)
    assert "rankdir=BT" in frame_to_dot(frame_from_json({"chain": 3}))


def test_non_distributive_lattice_is_rejected():
    m3 = {
        "elements": ["0", "a", "b", "c", "1"],
        "leq": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "1"], ["b", "1"], ["c", "1"]],
    }
    with pytest.raises(InvalidInput, match="not a frame"):
        frame_from_json(m3)


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"elements": "ab"},
        {"elements": ["a", "a"]},
        {"elements": ["a", "b"], "leq": [["a", "z"]]},
        {"elements": ["a", "b"], "leq": [["a"]]},
        {"points": ["p"], "tauP": [["q"]]},
        {"points": ["p"], "tauP": ["p"]},
        {"plus": {"chain": 2}, "minus": {"chain": 2}, "relations": [["x+", "1"]]},
        {"plus": {"chain": 2}, "minus": {"chain": 2}, "relations": [["(1+", "1"]]},
        {"plus": {"chain": 2}, "minus": {"chain": 2}, "con": [["7", "0"]]},
        {"nothing": 1},
    ],
)
def test_malformed_input(data):
    with pytest.raises(InvalidInput):
        kind = detect_kind(data)
        {
            "frame": frame_from_json,
            "biframe": biframe_from_json,
            "dframe": dframe_from_json,
            "bispace": bispace_from_json,
        }[kind](data)


def test_load_reports_unreadable_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidInput):
        load(str(bad))
    with pytest.raises(InvalidInput):
        load(str(tmp_path / "missing.json"))


def test_bispace_loader_closes_families():
    space, report = bispace_from_json({"points": ["a", "b"], "tauP": [["a"], ["b"]], "tauM": []})
    assert len(space.tau_plus) == 4 and len(space.tau_minus) == 2
    assert ["a", "b"] in report["added"]["tauP"]


@given(bispaces(4))
def test_bispace_roundtrip(space):
    back, report = bispace_from_json(json.loads(dumps(bispace_to_json(space))))
    assert (back.tau_plus, back.tau_minus) == (space.tau_plus, space.tau_minus)
    assert not any(report["added"].values())


def test_biframe_relations_are_parsed():
    c3 = {"chain": 3}
    free = biframe_from_json({"plus": c3, "minus": c3})
    # Two points per component, so the free biframe has four bipoints; each
    # relation below removes exactly the bipoint that violates it.
    assert free.main.size() == 6 and len(bipoint_pairs(free)) == 4
    disjoint = biframe_from_json({"plus": c3, "minus": c3, "relations": [["1+ & 1-", "0"]]})
    assert disjoint.main.size() == 5 and len(bipoint_pairs(disjoint)) == 3
    covering = biframe_from_json({"plus": c3, "minus": c3, "relations": [["1", "(1+ | 0) | (1- & 1)"]]})
    assert covering.main.size() == 5 and len(bipoint_pairs(covering)) == 3


def test_biframe_roundtrip():
    for x in enumerate_bispaces(3):
        b = b_omega_fin(x)
        text = biframe_to_json(b)
        back = biframe_from_json(text)
        assert back.main.size() == b.main.size()
        assert len(bipoint_pairs(back)) == len(bipoint_pairs(b))
        assert biframe_to_json(back) == text


def test_dframe_roundtrip_and_report():
    for x in enumerate_bispaces(2):
        d = d_omega(x)
        back, report = dframe_from_json(dframe_to_json(d))
        assert dframe_to_json(back) == dframe_to_json(d)
        assert report["violations"] == [] and not any(report["added"].values())
    _, report = dframe_from_json({"plus": {"chain": 2}, "minus": {"chain": 2}, "con": [["1", "0"]], "tot": []})
    assert ["0", "0"] in report["added"]["con"]


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
