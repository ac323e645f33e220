import io
import json
import subprocess
import sys

import pytest

from tableauwalk.cli import run
from tableauwalk.tableaux import validate


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count():
    assert call("count", "--shape", "2,1", "--length", "5")[:2] == (0, "20\n")
    assert call("count", "--shape", "2,1", "--length", "4")[:2] == (0, "0\n")
    assert call("count", "--length", "4")[:2] == (0, "3\n")


def test_sample_writes_valid_tableau_json():
    code, out, _ = call("sample", "--shape", "2,1", "--length", "9", "--seed", "4")
    assert code == 0
    t = json.loads(out)
    assert t[0] == [] and t[-1] == [2, 1] and validate(t)
    assert call("sample", "--shape", "2,1", "--length", "9", "--seed", "4")[1] == out


def test_sample_with_no_tableaux_is_usage_error():
    code, _, err = call("sample", "--shape", "2,1", "--length", "4")
    assert code == 2 and "no oscillating tableaux" in err


def test_enumerate():
    code, out, _ = call("enumerate", "--shape", "", "--length", "4")
    assert code == 0 and len(json.loads(out)) == 3
    assert call("enumerate", "--length", "12")[0] == 2


def test_bad_arguments_exit_two():
    assert call("count", "--shape", "1,2", "--length", "3")[0] == 2
    assert call("simulate", "--n", "5", "--y0", "2")[0] == 2
    assert call("simulate", "--n", "5", "--weights", "bogus")[0] == 2
    assert call("nonsense")[0] == 2
    assert call("limit", "--grid", "0.5,0.2")[0] == 2
    assert call("campaign", "--config", "/nonexistent/file.cfg")[0] == 2


def test_simulate_formats():
    code, out, _ = call("simulate", "--n", "4", "--y0", "4")
    assert code == 0 and json.loads(out) == [4, 3, 2, 1, 0]
    code, out, _ = call("simulate", "--n", "2", "--format", "csv")
    assert out.splitlines() == ["X,H", "0,0", "1,1", "2,0"]
    assert call("simulate", "--n", "50", "--weights", "q:0.8", "--seed", "3")[0] == 0
    assert call("simulate", "--n", "50", "--weights", "power:2")[0] == 0


def test_distribution():
    code, out, _ = call("distribution", "--n", "4")
    assert code == 0
    assert "2,0,1/3" in call("distribution", "--n", "4", "--format", "csv")[1]


def test_moments_and_covariance():
    code, out, _ = call("moments", "--n", "4", "--format", "csv")
    assert code == 0 and "2,2,8/3,8/3" in out
    rows = json.loads(call("moments", "--n", "6", "--order", "3")[1])
    assert len(rows) == 7 * 4
    assert call("covariance", "--n", "6", "--x1", "2", "--x2", "4")[1] == "8/75\n"
    assert call("covariance", "--n", "6", "--x1", "4", "--x2", "2")[1] == "8/75\n"
    assert call("covariance", "--n", "4", "--x1", "2", "--x2", "2")[1] == "8/9\n"
    payload = json.loads(call("covariance", "--n", "6", "--x1", "2", "--x2", "4", "--format", "json")[1])
    assert payload["value"] == "8/75"
    assert call("covariance", "--n", "3", "--y0", "1", "--x1", "1", "--x2", "2")[0] == 2


def test_volume():
    code, out, _ = call("volume", "--n", "4", "--seed", "1")
    payload = json.loads(out)
    assert code == 0 and payload["mean"] == "10/3" and payload["variance"] == "8/9"
    assert payload["sample_volume"] in (2, 4)


def test_limit():
    code, out, _ = call("limit", "--grid", "0.25,0.5")
    payload = json.loads(out)
    assert code == 0
    assert payload["determinant"] == pytest.approx(1 / 128)
    assert payload["inverse_residual"] < 1e-12
    assert call("limit", "--grid", "0.25,0.5", "--format", "csv")[0] == 0


def test_campaign_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# small run\nn = 40\ny0 = 0\nsamples = 300\nseed = 8\nobservables = volume, pair_heights(10,20)\nbins = 10\n")
    code, out, _ = call("campaign", "--config", str(cfg))
    assert code == 0
    payload = json.loads(out)
    assert payload["samples"] == 300
    assert set(payload["estimates"]) == {"volume", "pair_heights(10,20)"}
    assert call("campaign", "--config", str(cfg), "--format", "csv")[1].startswith("observable,")
    bad = tmp_path / "bad.cfg"
    bad.write_text("n = 40\ncolour = blue\n")
    assert call("campaign", "--config", str(bad))[0] == 2


def test_verify_passes():
    code, out, _ = call("verify", "--max-n", "6")
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tableauwalk", "count", "--shape", "2,1", "--length", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "20\n"


def test_verify_failure_exits_one(monkeypatch):
    from tableauwalk import cli
    from tableauwalk.verify import CheckResult

    monkeypatch.setattr(cli, "run_verification", lambda max_n: [CheckResult("broken", False, "forced")])
    code, out, _ = call("verify")
    assert code == 1 and out.startswith("FAIL broken")
