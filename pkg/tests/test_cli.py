import io
import json
import subprocess
import sys

import pytest

from theta_forge.cli import main
from theta_forge.quotient import Expansion
from theta_forge.ring import parse_poly, t
from theta_forge.theta import theta_double


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_theta_text():
    code, text = run("theta", "--k", "0", "--lambda", "3,1")
    assert code == 0
    assert parse_poly(text) == theta_double((3, 1), 0)
    assert text.startswith("c[1]^2*t[1]*t[2]")


def test_theta_empty_partition():
    assert run("theta", "--k", "2", "--lambda", "") == (0, "1\n")


def test_theta_not_k_strict(capsys):
    code, _ = run("theta", "--k", "1", "--lambda", "2,2")
    assert code == 2
    assert "not k-strict" in capsys.readouterr().err


def test_theta_formats_round_trip():
    _, js = run("theta", "--k", "1", "--lambda", "3,1", "--format", "json")
    assert parse_poly(js) == theta_double((3, 1), 1)
    _, latex = run("theta", "--k", "0", "--lambda", "2", "--format", "latex")
    assert latex == "-c_{1} t_{1} + c_{2}\n"
    _, single = run("theta", "--k", "1", "--lambda", "2,1", "--single")
    assert single == "c[1]*c[2] - c[3]\n"


def test_bad_arguments_exit_two(capsys):
    assert main(["theta", "--k", "-1", "--lambda", "1"], out=io.StringIO()) == 2
    assert main(["theta", "--k", "0", "--lambda", "x"], out=io.StringIO()) == 2
    assert main(["nonsense"], out=io.StringIO()) == 2
    assert main(["chevalley", "--k", "0"], out=io.StringIO()) == 2


def test_chevalley_worked_example():
    code, text = run("chevalley", "--k", "2", "--lambda", "7,4,3,2,1,1", "--verify")
    assert code == 0
    assert "w: 4,8,-5,-2,-1,3,6,7" in text
    assert "gamma: (-4,-1,0,3,6,7,8)" in text
    assert "coefficient: t[1] + t[2] + t[4] + 2*t[5] + t[8]" in text
    assert "2 x (8,4,3,2,1,1)  [IIa]" in text
    assert text.rstrip().endswith("verify: pass")


def test_chevalley_empty_partition_json():
    code, text = run("chevalley", "--k", "1", "--lambda", "", "--format", "json")
    report = json.loads(text)
    assert code == 0
    assert report["covers"] == [{"mu": [1], "e": 1, "kind": "I"}]


def test_chevalley_sweep_table():
    code, text = run("chevalley", "--all", "--max-weight", "4")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].split() == ["k", "cases", "failed", "result"]
    assert len(lines) == 5 and lines[-1] == "overall: pass"


def test_expand_c1(monkeypatch):
    code, text = run("expand", "--k", "2", "--expr", "-", stdin="c[1]", monkeypatch=monkeypatch)
    assert code == 0
    assert Expansion.from_json(json.loads(text)) == Expansion({(): t(1) + t(2), (1,): 1}, 2)


def test_expand_zero_and_omega(monkeypatch, tmp_path):
    _, text = run("expand", "--k", "0", "--expr", "-", stdin="0", monkeypatch=monkeypatch)
    assert json.loads(text)["coeffs"] == []
    path = tmp_path / "omega.txt"
    path.write_text("Omega[3,1]\n")
    _, text = run("expand", "--k", "0", "--expr", str(path))
    assert Expansion.from_json(json.loads(text)) == {(3, 1): 1}


def test_expand_product_with_truncation(monkeypatch):
    _, full = run("expand", "--k", "0", "--expr", "-", stdin="Theta[1]*Theta[1]", monkeypatch=monkeypatch)
    assert Expansion.from_json(json.loads(full)) == {(2,): 2, (1,): 2 * t(1)}
    _, cut = run("expand", "--k", "0", "--n", "1", "--expr", "-", stdin="Theta[1]*Theta[1]", monkeypatch=monkeypatch)
    obj = json.loads(cut)
    assert obj["n"] == 1
    assert Expansion.from_json(obj) == {(1,): 2 * t(1)}


def test_expand_errors(monkeypatch, tmp_path, capsys):
    assert run("expand", "--k", "1", "--expr", "-", stdin="c[1", monkeypatch=monkeypatch)[0] == 2
    assert run("expand", "--k", "1", "--expr", "-", stdin="Theta[2,2]", monkeypatch=monkeypatch)[0] == 2
    assert run("expand", "--k", "1", "--expr", str(tmp_path / "missing"))[0] == 2
    assert "error:" in capsys.readouterr().err


def test_verify_single_suite_json():
    code, text = run("verify", "--suite", "chevalley", "--k-max", "1", "--weight-max", "4")
    report = json.loads(text)
    assert code == 0 and report["pass"]
    assert [s["name"] for s in report["suites"]] == ["chevalley"]
    assert all("seconds" not in c for c in report["suites"][0]["checks"])


def test_verify_is_byte_identical_across_runs():
    argv = ["verify", "--suite", "basis", "--suite", "divdiff", "--k-max", "1", "--weight-max", "4", "--seed", "3"]
    assert run(*argv) == run(*argv)


def test_verify_text_and_unknown_suite():
    code, text = run("verify", "--suite", "ring", "--format", "text")
    assert code == 0 and text.splitlines()[-1] == "overall: pass"
    assert run("verify", "--suite", "bogus")[0] == 2


def test_cache_directory(tmp_path, monkeypatch):
    monkeypatch.setenv("THETA_FORGE_CACHE", str(tmp_path))
    first = run("theta", "--k", "1", "--lambda", "3,2")
    assert list(tmp_path.iterdir())
    second = run("theta", "--k", "1", "--lambda", "3,2")
    assert first == second
    explicit = tmp_path / "other"
    assert run("--cache", str(explicit), "theta", "--k", "1", "--lambda", "3,2") == first
    assert len(list(explicit.iterdir())) == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "theta_forge.cli", "theta", "--k", "0", "--lambda", "2,1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert parse_poly(proc.stdout) == theta_double((2, 1), 0)
