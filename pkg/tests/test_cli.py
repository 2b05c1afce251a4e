import json
import subprocess
import sys

import pytest

from superdual.cli import main

YM = json.dumps(
    {"p": 2, "q": 2, "m": 4, "mu_L": [0, 0], "tau": [1, 1, 0, 0], "mu_R": [0, 0],
     "beta_L": "0", "beta_R": "0"}
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_yangmills(capsys):
    code, out, _ = run(capsys, "classify", "--label", YM)
    assert code == 0
    assert "UnitaryShort" in out and "(1/2,1/2)-BPS" in out


def test_classify_nonunitary_exit3(capsys):
    lab = json.dumps({"p": 2, "q": 2, "m": 4, "mu_L": [], "tau": [], "mu_R": [],
                      "beta_L": "0", "beta_R": "1/2"})
    code, out, _ = run(capsys, "classify", "--label", lab)
    assert code == 3 and "NonUnitary" in out


def test_classify_label_file(tmp_path, capsys):
    f = tmp_path / "yangmills.json"
    f.write_text(YM)
    code, out, _ = run(capsys, "classify", "--label", str(f))
    assert code == 0


def test_weight_json_round_trip(capsys):
    code, out, _ = run(capsys, "weight", "--label", YM, "--grading", "su(2,|4|2)")
    assert code == 0
    data = json.loads(out)
    assert data["values"] == ["-1", "-1", "1", "1", "0", "0", "0", "0"]
    # emitted weight JSON is accepted back by the lattice command
    code2, out2, _ = run(capsys, "lattice", "--weight", json.dumps(data))
    assert code2 == 0
    # byte stability after one re-normalisation pass
    code3, out3, _ = run(capsys, "weight", "--label", YM, "--grading", "su(2,|4|2)")
    assert out3 == out


def test_lattice_text_output(capsys):
    lab = json.dumps({"p": 0, "q": 4, "m": 2, "mu_L": [], "tau": [1, 0],
                      "mu_R": [3, 1, 0, 0], "beta_L": "0", "beta_R": "1"})
    code, out, _ = run(capsys, "lattice", "--label", lab)
    assert code == 3
    lines = out.strip().splitlines()
    assert lines[0].split() == ["0", "-"]  # top row printed first
    assert "violations:" in lines[-1]


def test_diagram_formats(capsys):
    code, out, _ = run(capsys, "diagram", "--label", YM, "--format", "ascii")
    assert code == 0 and "[][]" in out
    code, out, _ = run(capsys, "diagram", "--label", YM, "--format", "svg")
    assert code == 0 and out.startswith("<svg")
    code, out, _ = run(capsys, "diagram", "--label", YM, "--format", "json")
    data = json.loads(out)
    assert data["P"] == 1 and data["fdelta"] == 0


def test_shorten_and_do(capsys):
    code, out, _ = run(capsys, "shorten", "--label", YM)
    assert code == 0
    assert "right:" in out and "left:" in out
    assert "B[0,1,0](0,0)^(1/2,1/2)" in out
    code, out, _ = run(capsys, "do-label", "--label", YM)
    assert out.strip() == "B[0,1,0](0,0)^(1/2,1/2)"


def test_verify_command(capsys):
    lab = json.dumps({"p": 1, "q": 1, "m": 0, "mu_L": [], "tau": [], "mu_R": [],
                      "beta_L": "0", "beta_R": "3/2"})
    code, out, _ = run(capsys, "verify", "--label", lab, "--cutoff", "4")
    assert code == 0 and "positive_definite=True" in out


def test_tables_golden(capsys):
    code, out, _ = run(capsys, "tables", "--table", "1", "--check")
    assert code == 0
    assert "[0,110,0;0,0]" in out


def test_tensor_command(capsys):
    f = json.dumps({"p": 2, "q": 2, "m": 4, "mu_L": [], "tau": [1, 0, 0], "mu_R": [],
                    "beta_L": "0", "beta_R": "0"})
    code, out, _ = run(capsys, "tensor", "--left", f, "--right", f)
    assert code == 0
    assert "[0,0,1100,0,0;1,0]" in out and "[0,0,2000,0,0;0,0]" in out


def test_usage_error_exit2(capsys):
    assert main(["classify"]) == 2
    assert main(["classify", "--label", "{not json"]) == 2


def test_module_invocation_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "superdual.cli", "classify", "--label", YM],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "UnitaryShort" in proc.stdout
