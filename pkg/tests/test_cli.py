import io
import json
import subprocess
import sys

import pytest

from freediv.cli import main


def call(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_json():
    code, text = call("analyze", "x*y*z", "--ring", "x,y,z", "--tasks", "divisor")
    assert code == 0
    env = json.loads(text)
    assert env["schema"] == 1
    assert env["results"]["divisor"]["is_free"] is True


def test_analyze_text():
    code, text = call("analyze", "x^3+y^3+z^3", "--ring", "x,y,z", "--tasks", "divisor",
                      "--format", "text")
    assert code == 0 and "is_free" in text


def test_parse_error_exit_code(capsys):
    code, _ = call("analyze", "x y", "--ring", "x,y,z")
    assert code == 2
    assert "parse error" in capsys.readouterr().err


def test_missing_ring_is_usage_error():
    code, _ = call("analyze", "x*y*z")
    assert code == 2


def test_bad_family_is_usage_error():
    assert call("family", "family1:n=2")[0] == 2


def test_rejected_family_reported():
    code, text = call("family", "family4:L=x - y;x + y + z;y + z")
    assert code == 0
    assert "not reduced" in json.loads(text)["rejected"]


def test_family_check_passes():
    code, text = call("family", "family4:L=y;x;x", "--check")
    assert code == 0
    checks = json.loads(text)["checks"]
    assert checks and all(c["status"] == "pass" for c in checks)


def test_truncation_exit_code():
    code, text = call("family", "family1:n=5", "--tasks", "blowup", "--deadline", "0.001")
    assert code == 3
    assert json.loads(text)["results"]["blowup"].get("truncated")


def test_regress_subset_deterministic():
    a = call("regress", "--only", "normal_crossing[n=3]", "--only", "xyz_w3", "--format", "json")
    b = call("regress", "--only", "normal_crossing[n=3]", "--only", "xyz_w3", "--format", "json")
    assert a[0] == 0 and a == b


def test_corrupt_flag_fails_with_claim():
    code, text = call("regress", "--only", "normal_crossing[n=3]",
                      "--corrupt", "normal_crossing[n=3]:analytic_spread")
    assert code == 1
    assert "FAIL" in text and "claim:" in text


def test_hessian_experiment_gating():
    assert call("hessian-experiment", "--family", "example:catalecticant")[0] == 2
    code, text = call("hessian-experiment", "--family", "example:circulant4")
    assert code == 0


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "freediv.cli", "analyze", "x*y*(x+y+z)",
                        "--ring", "x,y,z", "--tasks", "divisor"], capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["results"]["divisor"]["is_free"] is True
