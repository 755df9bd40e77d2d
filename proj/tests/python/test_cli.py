import json
import os
import subprocess

import pytest

CLI = os.environ.get("NCBINOM_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="NCBINOM_CLI is not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)


def test_expand_text():
    r = run("expand", "--n", "1")
    assert r.returncode == 0
    assert r.stdout.strip() == "A + B | oracle_match: true"


def test_expand_closed_weyl():
    r = run("expand", "--n", "2", "--method", "closed_weyl")
    assert r.returncode == 0
    assert "M-basis: M_2 + C" in r.stdout


def test_expand_json():
    r = run("expand", "--n", "3", "--method", "closed_hsq", "--relation", "hsq", "--format", "json")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["oracle_match"] is True
    assert report["n"] == 3


def test_expand_relation_file(tmp_path):
    path = tmp_path / "rel.json"
    path.write_text(
        '{"alphabet":[{"name":"A"},{"name":"B"}],'
        '"rules":[{"pair":["B","A"],"replacement":{"terms":[{"coeff":"1","word":["A","B"]}]}}]}'
    )
    r = run("expand", "--n", "4", "--method", "theorem2", "--relation", str(path))
    assert r.returncode == 0
    assert "oracle_match: true" in r.stdout


def test_usage_errors():
    assert run("expand", "--n", "2", "--method", "closed_hsq", "--relation", "commutative").returncode == 2
    assert run("expand").returncode == 2
    assert run("expand", "--n", "2", "--method", "nope").returncode == 2
    assert run("verify", "--suite", "nope").returncode == 2
    assert run("bogus").returncode == 2


def test_verify():
    r = run("verify", "--suite", "hsq", "--max-n", "5")
    assert r.returncode == 0
    assert "FAIL" not in r.stdout


def test_hermite():
    r = run("hermite", "--n", "3")
    assert r.returncode == 0
    assert "He_3(x) = x^3 - 3*x" in r.stdout
    r = run("hermite", "--n", "2", "--format", "json")
    lines = [json.loads(line) for line in r.stdout.splitlines() if line.strip()]
    assert len(lines) == 3
    assert lines[-1] == {"coeffs": {"2": "1", "0": "-1"}}


def test_gamma_and_exp_check():
    r = run("gamma", "--n", "3")
    assert r.returncode == 0
    assert "1 + 3*h + 2*h^2" in r.stdout
    r = run("exp-check", "--order", "4")
    assert r.returncode == 0
