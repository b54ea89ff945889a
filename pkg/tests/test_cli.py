import json

import pytest

from bifrm import caps
from bifrm.cli import main

TWO_POINT = {"points": ["a", "b"], "tauP": [["a"]], "tauM": [["a"]]}
INDISCRETE = {"points": ["a", "b"], "tauP": [], "tauM": []}
CHAIN_BIFRAME = {"plus": {"chain": 3}, "minus": {"chain": 3}, "relations": [["1+ & 1-", "0"]]}
BAD_DFRAME = {"plus": {"chain": 3}, "minus": {"chain": 2}, "con": [["2", "1"]], "tot": [["0", "0"]]}


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(path)

    return _write


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_validate_kinds(write, capsys):
    for name, data in [("f.json", {"chain": 3}), ("b.json", CHAIN_BIFRAME), ("x.json", TWO_POINT)]:
        code, out = run_json(capsys, ["validate", write(name, data)])
        assert code == 0 and out["valid"]
    code, out = run_json(capsys, ["validate", write("d.json", BAD_DFRAME)])
    assert code == 1 and out["violations"]


def test_input_errors_exit_2(write, capsys):
    assert main(["validate", write("bad.json", "{oops")]) == 2
    assert main(["validate", write("odd.json", {"nothing": 0})]) == 2
    assert main(["skula", write("f.json", {"chain": 3})]) == 2
    assert main(["spectrum", write("b.json", CHAIN_BIFRAME), "--duality", "d"]) == 2
    assert main(["verify", "--theorem", "no such theorem"]) == 2
    assert "invalid input" in capsys.readouterr().err


def test_spectrum_of_two_point_space(write, capsys):
    path = write("x.json", TWO_POINT)
    code, fin = run_json(capsys, ["spectrum", path])
    assert code == 0 and len(fin["spectrum"]["points"]) == 2 and fin["unit"]["bihomeomorphism"]
    _, d = run_json(capsys, ["spectrum", path, "--duality", "d"])
    assert len(d["spectrum"]["points"]) == 4 and not d["unit"]["bihomeomorphism"]
    assert main(["spectrum", path, "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph")


def test_assembly_with_certificates(write, tmp_path, capsys):
    dot = tmp_path / "a.dot"
    code, out = run_json(
        capsys, ["assembly", write("b.json", CHAIN_BIFRAME), "--free-presentation", "--alpha", "--dot", str(dot)]
    )
    assert code == 0
    assert out["free_presentation"]["isomorphism"] and out["alpha"]["bihomeomorphism"]
    assert out["finitary_assembly_is_whole"]
    assert dot.read_text().count("digraph") == 3


def test_skula_and_check(write, capsys):
    code, sk = run_json(capsys, ["skula", write("x.json", TWO_POINT)])
    assert code == 0 and sorted(map(sorted, sk["tauP"])) == [[], ["a"], ["a", "b"], ["b"]]
    code, props = run_json(capsys, ["check", write("i.json", INDISCRETE), "--axiom", "pairwiseT0"])
    assert code == 1 and props == {"pairwiseT0": False}
    code, props = run_json(capsys, ["check", write("x.json", TWO_POINT), "--axiom", "biSober"])
    assert code == 0 and props == {"biSober": True}


def test_verify_pass_and_mutation(capsys):
    code, report = run_json(capsys, ["verify", "--max-points", "2"])
    assert code == 0 and report["ok"]
    code, report = run_json(capsys, ["verify", "--max-points", "2", "--mutate"])
    assert code == 1 and any(r["status"] == "fail" for r in report["theorems"])
    assert main(["verify", "--list"]) == 0
    assert "not falsifiable at desk scale" in capsys.readouterr().out


def test_verify_json_is_deterministic(capsys):
    argv = ["verify", "--max-points", "3", "--sample", "8", "--seed", "5", "--format", "json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_verify_empty_family_is_all_skipped(capsys):
    code, report = run_json(
        capsys, ["verify", "--max-points", "0", "--max-frame-size", "0", "--map-points", "0"]
    )
    assert code == 0
    assert {r["status"] for r in report["theorems"]} == {"skipped"}


def test_enumerate(capsys):
    code, out = run_json(capsys, ["enumerate", "--max-points", "2"])
    assert code == 0 and out["count"] == 11 and out["by_points"] == {"1": 1, "2": 10}


def test_caps_exit_3(write, monkeypatch, capsys):
    assert main(["enumerate", "--max-points", "9"]) == 3
    assert main(["assembly", write("b.json", CHAIN_BIFRAME), "--cap", "4"]) == 3
    monkeypatch.setenv("BIFRM_CAPS", "enumerate_points=1")
    monkeypatch.setattr(caps, "_current", None)
    assert main(["enumerate", "--max-points", "2"]) == 3
    monkeypatch.setenv("BIFRM_CAPS", "bogus")
    monkeypatch.setattr(caps, "_current", None)
    assert main(["enumerate", "--max-points", "1"]) == 2
