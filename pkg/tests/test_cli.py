import json
import subprocess
import sys

import pytest

from gocert import TOOL_VERSION, verify_document
from gocert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_finite(capsys):
    code, out, err = run_cli(
        capsys, "analyze", "--p", "3", "--f", "2", "--curve", "2,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "finite"
    assert doc["tool_version"] == TOOL_VERSION
    assert "verdict: finite" in err


def test_analyze_inconclusive_exit_code(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--p", "3", "--f", "2", "--curve", "3,0"
    )
    assert code == 2
    assert json.loads(out)["verdict"] == "inconclusive"


def test_analyze_with_ramification_flags(capsys):
    code, out, _ = run_cli(
        capsys,
        "analyze", "--p", "2", "--f", "4", "--ram-inf", "1,2", "--ram-fin", "0",
        "--curve", "0,4",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["rd"]["s_inf"] == [1, 2]
    assert doc["nodes"][0]["degree_bound"] == 9


def test_analyze_rejects_bad_parity(capsys):
    code, out, err = run_cli(
        capsys, "analyze", "--p", "3", "--f", "3", "--ram-inf", "0", "--curve", "2,0"
    )
    assert code == 1
    assert json.loads(out)["verdict"] == "error"
    assert "even number" in err


def test_analyze_requires_flags_or_config(capsys):
    code, out, err = run_cli(capsys, "analyze", "--p", "3")
    assert code == 1
    assert "missing" in err
    assert json.loads(out)["verdict"] == "error"


def test_analyze_writes_out_file(tmp_path, capsys):
    target = tmp_path / "cert.json"
    code, out, _ = run_cli(
        capsys,
        "analyze", "--p", "2", "--f", "1", "--curve", "0,4", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["verdict"] == "finite"
    assert verify_document(doc)


def test_analyze_from_config_file(tmp_path, capsys):
    config = tmp_path / "run.json"
    config.write_text(
        json.dumps({"p": 3, "f": 2, "ram_inf": [], "ram_fin": 0, "curve": [2, 0]})
    )
    code, out, _ = run_cli(capsys, "analyze", "--config", str(config))
    assert code == 0
    assert json.loads(out)["verdict"] == "finite"

    config.write_text(json.dumps({"p": 3, "f": 2, "curve": [2, 0], "bogus": 1}))
    code, out, err = run_cli(capsys, "analyze", "--config", str(config))
    assert code == 1
    assert "unknown config keys" in err


def test_verify_roundtrip_and_tamper(tmp_path, capsys):
    target = tmp_path / "cert.json"
    code, _, _ = run_cli(
        capsys, "analyze", "--p", "2", "--f", "3", "--curve", "2,0", "--out", str(target)
    )
    assert code == 0
    code, _, err = run_cli(capsys, "verify", "--in", str(target))
    assert code == 0
    assert "verified" in err

    doc = json.loads(target.read_text())
    doc["nodes"][0]["degree_bound"] += 1
    target.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "verify", "--in", str(target))
    assert code == 1
    assert "rejected" in err


def test_verify_handles_unreadable_input(tmp_path, capsys):
    target = tmp_path / "not-json.txt"
    target.write_text("{")
    code, _, err = run_cli(capsys, "verify", "--in", str(target))
    assert code == 1
    assert "error" in err


def test_selfcheck_small(capsys):
    code, out, _ = run_cli(capsys, "selfcheck", "--max-f", "3", "--primes", "2,3")
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("PASS")]
    assert len(lines) == 9
    assert "all suites passed" in out


def test_selfcheck_empty(capsys):
    code, out, _ = run_cli(capsys, "selfcheck", "--max-f", "0", "--primes", "2")
    assert code == 0
    assert "no suites" in out


@pytest.mark.parametrize("runs", [2])
def test_cross_process_determinism(tmp_path, runs):
    # separate interpreters, different hash seeds: output bytes must agree
    outputs = set()
    for seed in range(runs):
        proc = subprocess.run(
            [sys.executable, "-m", "gocert", "analyze", "--p", "5", "--f", "4",
             "--ram-inf", "0,2", "--curve", "2,0"],
            capture_output=True,
            env={"PYTHONHASHSEED": str(seed), "PATH": "/usr/bin:/bin"},
        )
        assert proc.returncode == 0, proc.stderr
        outputs.add(proc.stdout)
    assert len(outputs) == 1
