import json
import subprocess
import sys

import pytest

from gradedhecke.cli import main
from gradedhecke.verification import ALL_SUITES, SuiteResult


def run_cli(*argv):
    return main(list(argv))


def test_eval_braid(capsys):
    assert run_cli("eval", "--preset", "A1", "--k", "1", "x * N[s]") == 0
    assert capsys.readouterr().out.strip() == "N[e]*(2*r) + N[s]*(-x)"


def test_eval_square(capsys):
    assert run_cli("eval", "--preset", "A1", "N[s]*N[s]") == 0
    assert capsys.readouterr().out.strip() == "N[e]*(1)"


def test_eval_involution(capsys):
    assert run_cli("eval", "--preset", "A1", "IM(N[s]*x)") == 0
    assert capsys.readouterr().out.strip() == "N[s]*(x)"


def test_eval_parse_error(capsys):
    assert run_cli("eval", "--preset", "A1", "x + * r") == 2
    err = capsys.readouterr().err
    assert "position" in err


def test_verify_passes(capsys):
    code = run_cli("verify", "--preset", "A1", "--k", "1",
                   "--suites", "associativity,center,cocycle", "--cases", "15")
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("[PASS]") == 3


def test_verify_b2_no_gamma(capsys):
    code = run_cli("verify", "--preset", "B2", "--gamma", "none", "--k", "2,1",
                   "--suites", "group-embedding,parameters", "--cases", "10")
    assert code == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(algebra, rng, cases=None):
        return SuiteResult("stub", False, "forced failure")

    monkeypatch.setitem(ALL_SUITES, "stub", failing)
    code = run_cli("verify", "--preset", "A1", "--suites", "stub")
    out = capsys.readouterr().out
    assert code == 1 and "[FAIL] stub" in out


def test_verify_unknown_suite(capsys):
    assert run_cli("verify", "--preset", "A1", "--suites", "nope") == 2


def test_malformed_cocycle_file(tmp_path, capsys):
    # an order-3 twisting group with a non-associative table
    config = {
        "types": [["D", 4]],
        "gamma": [[2, 1, 3, 0]],
        "k": ["1"],
        "cyclotomic_order": 3,
        "cocycle": [["1", "1", "1"], ["1", "z", "1"], ["1", "1", "1"]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(config))
    code = run_cli("verify", "--algebra-file", str(path))
    err = capsys.readouterr().err
    assert code == 2
    assert "cocycle" in err and "triple" in err


def test_cocycle_file_override(tmp_path, capsys):
    good = tmp_path / "minus.json"
    good.write_text(json.dumps([["1", "1"], ["1", "-1"]]))
    code = run_cli("eval", "--preset", "A2flip", "--cocycle-file", str(good),
                   "N[g1]*N[g1]")
    assert code == 0
    assert capsys.readouterr().out.strip() == "N[e]*(-1)"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([["1", "-1"], ["1", "1"]]))  # breaks normalization
    code = run_cli("eval", "--preset", "A2flip", "--cocycle-file", str(bad),
                   "N[g1]")
    err = capsys.readouterr().err
    assert code == 2 and "cocycle" in err


def test_params_fixture(tmp_path, capsys):
    fixture = tmp_path / "sl3.json"
    fixture.write_text(json.dumps({"builder": "sl", "size": 3,
                                   "levi_blocks": [2, 1]}))
    assert run_cli("params", str(fixture), "--v", '{"E12": 1}') == 0
    out = capsys.readouterr().out
    assert "-> 3" in out and "invariance: ok" in out
    assert run_cli("params", str(fixture)) == 0
    out = capsys.readouterr().out
    assert "-> 2" in out


def test_params_check_f4(tmp_path, capsys):
    fixture = tmp_path / "sl3.json"
    fixture.write_text(json.dumps({"builder": "sl", "size": 3,
                                   "levi_blocks": [2, 1]}))
    assert run_cli("params", str(fixture), "--v", '{"E12": 1}', "--check-f4") == 0
    out = capsys.readouterr().out
    assert "admissible: True" in out


def test_classify_module_file(tmp_path, capsys):
    module = {"dim": 1, "r": 1,
              "x": [[[-1]]],
              "N": {"s1": [[-1]]}}
    path = tmp_path / "steinberg.json"
    path.write_text(json.dumps(module))
    assert run_cli("classify", "--preset", "A1", "--k", "1",
                   "--module-file", str(path)) == 0
    out = capsys.readouterr().out
    assert "relations hold" in out and "weight ('-1',) multiplicity 1" in out
    # a broken module is rejected
    bad = {"dim": 1, "r": 1, "x": [[[5]]], "N": {"s1": [[-1]]}}
    path.write_text(json.dumps(bad))
    assert run_cli("classify", "--preset", "A1", "--k", "1",
                   "--module-file", str(path)) == 2


def test_shipped_fixtures(capsys):
    import pathlib

    root = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    assert run_cli("params", str(root / "sl3_levi.json"), "--v", '{"E12": 1}') == 0
    assert "-> 3" in capsys.readouterr().out
    assert run_cli("params", str(root / "sp4_torus.json")) == 0
    assert "order 8" in capsys.readouterr().out
    # z is central, so ad(z) vanishes and every parameter is the minimum 2
    assert run_cli("params", str(root / "heisenberg_graded.json"),
                   "--v", '{"z": 1}') == 0
    assert "-> 2" in capsys.readouterr().out
    # e is nilpotent but lies outside the Levi: rejected
    assert run_cli("params", str(root / "heisenberg_graded.json"),
                   "--v", '{"e": 1}') == 2
    assert "Levi" in capsys.readouterr().err


def test_params_bad_grading(tmp_path, capsys):
    fixture = tmp_path / "bad.json"
    fixture.write_text(json.dumps({
        "basis": ["h", "e", "f"],
        "brackets": {"0,1": {"2": 1}},
        "weights": [[0], [2], [-2]],
        "levi": [True, False, False],
        "nilradical": [False, True, False],
    }))
    assert run_cli("params", str(fixture)) == 2
    err = capsys.readouterr().err
    assert "grading violated" in err and "h" in err and "e" in err and "f" in err


def test_classify_output(capsys):
    assert run_cli("classify", "--preset", "A1", "--k", "1") == 0
    out = capsys.readouterr().out
    assert "Steinberg -> sgn" in out
    assert "pi_0 -> triv" in out
    assert "tempered, essentially-discrete-series" in out


def test_ext_json(capsys):
    assert run_cli("ext", "--preset", "A1") == 0
    assert json.loads(capsys.readouterr().out) == {"0": 1, "1": 2, "2": 1}


def test_export_contains_braid_coefficient(capsys):
    assert run_cli("export", "--preset", "A1", "--k", "1", "structure",
                   "--degree-cap", "2") == 0
    payload = json.loads(capsys.readouterr().out)
    basis = payload["table"]["basis"]
    x_index = basis.index(["e", [1, 0]])
    s_index = basis.index(["s1", [0, 0]])
    entry = next(e for e in payload["table"]["products"]
                 if e["i"] == x_index and e["j"] == s_index)
    assert ["e", [0, 1], "2"] in entry["terms"]   # the 2 k r coefficient
    assert ["s1", [1, 0], "-1"] in entry["terms"]


def test_export_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for target in (a, b):
        assert run_cli("export", "--preset", "A2flip-tw", "structure",
                       "--degree-cap", "1", "--seed", "7",
                       "--out", str(target)) == 0
    assert a.read_bytes() == b.read_bytes()


def test_export_deterministic_subprocess():
    cmd = [sys.executable, "-m", "gradedhecke.cli", "export", "--preset", "A1",
           "ext", "--seed", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_classification_export(capsys):
    assert run_cli("export", "--preset", "A1", "--k", "1", "classification") == 0
    payload = json.loads(capsys.readouterr().out)
    by_label = {m["label"]: m for m in payload["modules"]}
    assert by_label["Steinberg"]["tempered"]
    assert payload["matching"] == {"Steinberg": "sgn", "pi_0": "triv"}
