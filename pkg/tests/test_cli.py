"""CLI surface: verbs, exit codes, config precedence."""

import json

import pytest

from specpoly.cli import main


def _write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "x": _write(tmp_path, "x.json", {"mode": "rational", "roots": ["1", "3"]}),
        "y": _write(tmp_path, "y.json", {"mode": "rational", "roots": ["0", "4"]}),
        "p": _write(tmp_path, "p.json", {"mode": "rational", "roots": ["0", "2", "4"]}),
        "q": _write(tmp_path, "q.json", {"mode": "rational", "roots": ["1", "2", "3"]}),
        "phi": _write(tmp_path, "phi.json", {"c": 1, "m": 0, "a": 1, "b": 0,
                                             "alphas": []}),
        "dir": tmp_path,
    }


def test_majorize_check_comparable(files, capsys):
    assert main(["majorize", "check", "--x", files["x"], "--y", files["y"]]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "Less"


def test_majorize_check_incomparable_exit_code(files):
    assert main(["majorize", "check", "--x", files["y"], "--y", files["x"]]) == 1


def test_majorize_witness(files, capsys):
    assert main(["majorize", "witness", "--x", files["x"], "--y", files["y"]]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows == [["3/4", "1/4"], ["1/4", "3/4"]]


def test_majorize_chain_alias(files, capsys):
    assert main(["majorize", "chain", "--x", files["q"], "--y", files["p"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert len(obj["steps"]) == 8


def test_chain_decompose_verify_roundtrip(files, capsys):
    out = str(files["dir"] / "chain.json")
    assert main(["chain", "decompose", "--p", files["p"], "--q", files["q"],
                 "--out", out]) == 0
    assert main(["chain", "verify", "--chain", out]) == 0
    assert "8 steps" in capsys.readouterr().out


def test_chain_verify_detects_tampering(files, tmp_path):
    out = str(files["dir"] / "chain.json")
    main(["chain", "decompose", "--p", files["p"], "--q", files["q"],
          "--out", out])
    obj = json.loads(open(out).read())
    obj["target"]["roots"][0] = "2"
    bad = _write(tmp_path, "bad.json", obj)
    assert main(["chain", "verify", "--chain", bad]) == 1


def test_chain_random_pair(files, capsys):
    assert main(["chain", "random-pair", "--n", "4", "--budget", "2",
                 "--seed", "9"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert len(obj["p"]["roots"]) == 4


def test_chain_decompose_not_majorized_is_error(files):
    assert main(["chain", "decompose", "--p", files["q"], "--q", files["p"]]) == 2


def test_op_apply(files, capsys):
    assert main(["op", "apply", "--phi", files["phi"], "--poly", files["p"],
                 "--degree", "3"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["mode"] == "float" and len(obj["roots"]) == 3


def test_op_appell(files, capsys):
    assert main(["op", "appell", "--phi", files["phi"], "--n", "2"]) == 0
    roots = json.loads(capsys.readouterr().out)["roots"]
    assert abs(roots[1] - 2 ** 0.5) < 1e-8


def test_op_shift_pencil_and_gaussian(files, capsys, tmp_path):
    sq = _write(tmp_path, "sq.json", {"mode": "float", "roots": [0.0, 0.0]})
    assert main(["op", "shift-pencil", "--poly", sq, "--lambda", "1"]) == 0
    roots = json.loads(capsys.readouterr().out)["roots"]
    assert abs(roots[0] + 1) < 1e-8 and abs(roots[1] - 1) < 1e-8
    assert main(["op", "gaussian", "--poly", sq, "--a", "1/2"]) == 0
    roots = json.loads(capsys.readouterr().out)["roots"]
    assert abs(roots[1] - 1) < 1e-8


def test_op_deform(files, capsys, tmp_path):
    s = _write(tmp_path, "s.json", ["1/2"])
    assert main(["op", "deform", "--phi", files["phi"], "--s", s]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["a"] == "1/2"


def test_op_multiplier_laguerre(files, capsys):
    assert main(["op", "multiplier", "--poly", files["p"], "--laguerre", "1", "0",
                 "--normalized"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert len(obj["roots"]) == 3


def test_pencil_scan_csv(files, capsys):
    assert main(["pencil", "scan", "--poly", files["x"], "--grid", "2", "5"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "lambda,x1,x2,f1,f2"
    assert len(lines) == 6


def test_verify_and_exit_codes(files):
    assert main(["verify", "chain", "--trials", "3", "--seed", "5"]) == 0


def test_hunt_exit_code(files):
    assert main(["hunt", "pb2", "--trials", "3", "--seed", "5",
                 "--degree-min", "2", "--degree-max", "2"]) == 0


def test_config_file_with_flag_override(files, tmp_path):
    cfg = _write(tmp_path, "cfg.json", {"trials": 4, "seed": 17,
                                        "degree_max": 4})
    out = str(tmp_path / "rep.jsonl")
    assert main(["verify", "deriv", "--config", cfg, "--trials", "2",
                 "--out", out]) == 0
    summary = json.loads(open(out).read().splitlines()[-1])
    assert summary["trials"] == 2            # flag beats config
    assert summary["config"]["seed"] == 17   # config applies otherwise


def test_config_unknown_key_is_usage_error(files, tmp_path):
    cfg = _write(tmp_path, "cfg.json", {"bogus": 1})
    assert main(["verify", "deriv", "--config", cfg]) == 2


def test_missing_file_is_usage_error(files):
    assert main(["majorize", "check", "--x", "/nonexistent.json",
                 "--y", files["y"]]) == 2
