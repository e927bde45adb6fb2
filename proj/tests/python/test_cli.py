import json
import os
import subprocess

import pytest

CLI = os.environ.get("QREL_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="QREL_CLI not set")


def run(*args, cache=None):
    cmd = [CLI]
    if cache is not None:
        cmd += ["--cache-dir", str(cache)]
    return subprocess.run(cmd + list(args), capture_output=True, text=True, timeout=300)


def test_series_output(tmp_path):
    r = run("series", "--name", "H", "--terms", "4", cache=tmp_path)
    assert r.returncode == 0
    assert r.stdout.strip() == "-1/12, 0, 0, 1/3, 1/2"
    r = run("series", "--name", "G2", "--terms", "2", cache=tmp_path)
    assert r.stdout.strip() == "-1/24, 1, 3"


def test_series_is_deterministic(tmp_path):
    a = run("series", "--name", "lambda:1:2:1:1:0", "--terms", "20", "--format", "csv", cache=tmp_path)
    b = run("series", "--name", "lambda:1:2:1:1:0", "--terms", "20", "--format", "csv", cache=tmp_path)
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_unknown_series_is_usage_error(tmp_path):
    assert run("series", "--name", "nosuch", cache=tmp_path).returncode == 1


def test_verify_exit_codes(tmp_path):
    assert run("verify", "eichler", "--max", "500", cache=tmp_path).returncode == 0
    assert run("verify", "bogus", cache=tmp_path).returncode == 1
    assert run("verify", "lambda_pa_u4", "--max", "100", cache=tmp_path).returncode == 2


def test_verify_json_names_the_sign_variant(tmp_path):
    r = run("verify", "kronecker_hurwitz", "--max", "100", "--json", cache=tmp_path)
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["relation"] == "kronecker_hurwitz"
    assert report["status"] == "pass"
    assert report["details"]["holding_variant"] == "+2lambda1"
    for key in ("range", "policy", "failures", "elapsed_ms"):
        assert key in report


def test_hurwitz_cache_is_idempotent(tmp_path):
    assert run("hurwitz", "--max", "100", cache=tmp_path).returncode == 0
    path = tmp_path / "hurwitz.csv"
    first = path.read_text()
    lines = first.splitlines()
    assert lines[0] == "0,-1,12"
    assert "23,3,1" in lines
    assert run("hurwitz", "--max", "100", cache=tmp_path).returncode == 0
    assert path.read_text() == first


def test_unknown_flag_is_an_error(tmp_path):
    assert run("series", "--bogus", cache=tmp_path).returncode != 0
