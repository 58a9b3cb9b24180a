import json
import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from gaussdeg.cli import main
from gaussdeg.serialize import canonical, coupling_to_json, dumps

GOLDEN = Path(__file__).parent / "golden"

# (name, extra args); input is GOLDEN/<name>_input.json, expected GOLDEN/<name>_output.json
GOLDEN_CASES = [
    ("classify", []),
    ("simulate", ["--oracle"]),
    ("decompose", ["--samples", "20"]),
    ("verify", []),
]


def run_module(*args):
    return subprocess.run(
        [sys.executable, "-m", "gaussdeg", *args], capture_output=True, text=True
    )


@pytest.mark.parametrize("name,extra", GOLDEN_CASES)
def test_golden(name, extra):
    proc = run_module(name, "--input", str(GOLDEN / f"{name}_input.json"), "--seed", "42", *extra)
    assert proc.returncode == 0, proc.stderr
    expected = GOLDEN / f"{name}_output.json"
    if os.environ.get("GAUSSDEG_REGEN_GOLDEN"):
        expected.write_text(proc.stdout)
    assert proc.stdout.encode() == expected.read_bytes()


def test_repeatable(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    src = str(GOLDEN / "decompose_input.json")
    assert main(["decompose", "--input", src, "--output", str(out1), "--samples", "5"]) == 0
    assert main(["decompose", "--input", src, "--output", str(out2), "--samples", "5"]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def _run(capsys, *args):
    code = main(list(args))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.mark.parametrize(
    "args,code",
    [
        (["classify", "--input", '{"bs": 0.3}'], 0),
        (["classify", "--input", "{bad json"], 2),
        (["classify", "--input", "[1, 2]"], 2),
        (["classify", "--input", '{"env": {"n": 0}}'], 2),
        (["classify", "--input", '{"bs": "x"}'], 2),
        (["classify", "--input", "/nonexistent/file.json"], 2),
        (["classify", "--input", '{"bs": 1.5}'], 3),
        (["classify", "--input", '{"A": [[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}'], 3),
        (["classify", "--input", '{"bs": 0.3, "env": {"n": 0, "m": 0.3}}'], 3),
        (["simulate", "--input", '{"bs": 0.3}'], 2),
        (["simulate", "--input", '{"amp": 2, "state": {"n": 0}}'], 0),
        (["simulate", "--input", '{"amp": 0.5, "state": {"n": 0}}'], 3),
        (["simulate", "--input", '{"bs": 0.5, "env": {"n": 0, "d": [1, 0]}, "state": {"n": 0}}'], 3),
        (["decompose", "--input", '{"bs": 1.0}'], 4),
        (["decompose", "--input", '{"bs": 0.0}'], 4),
        (["decompose", "--input", '{"bs": 0.3}'], 0),
        (["verify", "--input", "{}", "--identity", "weak", "--k", "2"], 0),
        (["verify", "--input", "{}", "--identity", "anti", "--k", "0.25"], 0),
        (["verify", "--input", "{}", "--identity", "weak", "--k", "0.25"], 3),
        (["verify", "--input", "{}", "--k", "2"], 2),
        (["verify", "--input", "{}", "--identity", "weak"], 2),
        (["verify", "--input", "{}", "--identity", "weak", "--k", "2", "--samples", "0"], 2),
        (["nonsense"], 2),
    ],
)
def test_exit_codes(capsys, args, code):
    got, out, err = _run(capsys, *args)
    assert got == code
    if code in (2, 3, 4) and args[0] != "nonsense" and "--samples" not in args:
        payload = json.loads(err)
        assert payload["error"] == {2: "parse", 3: "domain", 4: "unsupported"}[code]
        assert out == ""


def test_classify_fields(capsys):
    code, out, _ = _run(capsys, "classify", "--input", '{"bs": 0.3, "env": {"n": 0}}')
    rep = json.loads(out)
    assert rep["q"] == 0.3 and rep["anti_degradable"] and not rep["weakly_degradable"]
    assert rep["equivalent_map"] == "BS of transmissivity q"
    assert rep["env_purity"] == 1.0


def test_classify_amp_note(capsys):
    _, out, _ = _run(capsys, "classify", "--input", '{"amp": 2.0, "env": {"n": 0}}')
    rep = json.loads(out)
    assert rep["weakly_degradable"] and "degradable (env pure)" in rep["notes"]


def test_simulate_values(capsys):
    _, out, _ = _run(capsys, "simulate", "--input", '{"bs": 0.5, "env": {"n": 1}, "state": {"n": 0}}')
    assert json.loads(out) == {"d": [0.0, 0.0], "m": [0.0, 0.0], "n": 0.5}
    _, out, _ = _run(capsys, "simulate", "--input", '{"amp": 2, "state": {"n": 0}}')
    assert json.loads(out)["n"] == 1.0


def test_simulate_identity_coupling(capsys):
    doc = {"coupling": coupling_to_json(np.eye(4)), "env": {"n": 2}, "state": {"n": 0.3, "m": [0.1, 0.2], "d": [1, -1]}}
    _, out, _ = _run(capsys, "simulate", "--input", json.dumps(doc))
    assert json.loads(out) == {"n": 0.3, "m": [0.1, 0.2], "d": [1.0, -1.0]}


def test_simulate_raw_coupling_oracle(capsys):
    from gaussdeg import generate_coupling

    doc = {"coupling": coupling_to_json(generate_coupling(3, "BSq")), "env": {"n": 1}, "state": {"n": 0.2, "d": [0.5, 0]}}
    for flag in ([], ["--complementary"]):
        code, out, _ = _run(capsys, "simulate", "--input", json.dumps(doc), "--oracle", *flag)
        assert code == 0 and json.loads(out)["residual"] < 1e-9


def test_simulate_complementary(capsys):
    _, out, _ = _run(capsys, "simulate", "--input", '{"bs": 1.0, "env": {"n": 2}, "state": {"n": 0}}', "--complementary")
    assert json.loads(out)["n"] == 2.0


def test_decompose_negq(capsys):
    code, out, _ = _run(capsys, "decompose", "--input", str(GOLDEN / "decompose_input.json"), "--samples", "10")
    rep = json.loads(out)
    assert code == 0
    assert rep["decomposition"]["case"] == "ConjugateAmplifier"
    assert rep["decomposition"]["k"] == 1.5
    assert rep["verification"]["passed"]


def test_decompose_trivial(capsys):
    _, out, _ = _run(capsys, "decompose", "--input", '{"bs": 0.3}')
    rep = json.loads(out)
    assert rep["verification"]["max_residual"] < 1e-12


def test_verify_failure_exit(capsys):
    code, out, _ = _run(capsys, "verify", "--input", '{"identity": "weak", "k": 2}', "--tolerance", "1e-300")
    assert json.loads(out)["passed"] is False and code == 1


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO('{"bs": 0.5}'))
    code, out, _ = _run(capsys, "classify")
    assert code == 0 and json.loads(out)["weakly_degradable"]


def test_canonical_floats():
    assert canonical(-0.0) == 0.0 and str(canonical(-0.0)) == "0.0"
    assert canonical(0.1 + 0.2) == 0.3
    assert canonical(1 / 3) == 0.333333333333333
    assert dumps({"b": 1, "a": [1.0]}) == '{\n  "a": [\n    1.0\n  ],\n  "b": 1\n}\n'
