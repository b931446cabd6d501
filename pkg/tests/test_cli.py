import json
import subprocess
import sys

import pytest

from fusionmaj import checks, qseries
from fusionmaj.checks import SuiteConfig, run_suite
from fusionmaj.cli import main
from fusionmaj.fusion import build_filtration
from fusionmaj.qseries import QPoly, gauss_binomial
from fusionmaj.reports import CheckReport

SMALL = ["--n-max", "2", "--k-max", "1", "--degree-max", "2"]


def test_small_suite_passes(tmp_path, capsys):
    assert main(["suite", *SMALL, "--out", str(tmp_path)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    reports = [json.loads(line) for line in lines]
    assert len(reports) == len(checks.CHECKS)
    assert all(r["status"] == "pass" for r in reports)
    assert all(set(r) >= {"check", "params", "status", "ms"} for r in reports)
    assert [r["check"] for r in reports] == sorted(r["check"] for r in reports)
    assert (tmp_path / "reports.json").exists() and (tmp_path / "timings.json").exists()


def test_reports_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["suite", *SMALL, "--out", str(a)]) == 0
    assert main(["suite", *SMALL, "--out", str(b)]) == 0
    assert (a / "reports.json").read_bytes() == (b / "reports.json").read_bytes()


def test_tsv_report(tmp_path):
    assert main(["verify", "schur-weyl-dimension", "--n-max", "6", "--format", "tsv", "--out", str(tmp_path)]) == 0
    text = (tmp_path / "reports.tsv").read_text()
    assert text.splitlines()[0] == "check\tparams\tstatus\twitness"


def test_corrupted_oracle_fails_with_witness(monkeypatch, tmp_path, capsys):
    monkeypatch.setattr(qseries, "qhook_maj_gf", lambda shape: QPoly([42]))
    reports = run_suite(SuiteConfig(n_max=4, only=["qhook-oracle"]))
    assert reports[0].status == "fail"
    assert reports[0].witness["hook_formula"] == ["42"]
    assert main(["verify", "qhook-oracle", "--n-max", "4"]) == 1


def test_fail_requires_witness():
    with pytest.raises(ValueError):
        CheckReport("x", {}, "fail")


def test_custom_registry_sorted():
    fake = {"b": lambda cfg: CheckReport("b"), "a": lambda cfg: CheckReport("a", {}, "skipped")}
    assert [r.check for r in run_suite(SuiteConfig(), fake)] == ["a", "b"]


def test_verify_alias(capsys):
    assert main(["verify", "theorem1", "--N", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["params"]["n_max"] == 4 and out["params"]["instances"] == 2


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n-max": 4, "k-max": 1}))
    assert main(["verify", "schur-weyl-dimension", "--config", str(cfg), "--n-max", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["params"]["n_max"] == 2


def test_bad_config_is_usage_error(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"bogus": 1}))
    assert main(["suite", "--config", str(cfg)]) == 2


def test_usage_errors(capsys):
    assert main(["suite", "--n-max", "0"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["table", "maj-dist", "--N", "3"]) == 2
    assert "--N" in capsys.readouterr().err
    assert main(["table", "q-binomial"]) == 2
    assert "--k" in capsys.readouterr().err


def test_unwritable_out_reported_before_checks(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert main(["suite", *SMALL, "--out", str(blocker / "sub")]) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and "--out" in captured.err


def test_table_maj_dist(capsys):
    assert main(["table", "maj-dist", "--N", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["shape\tqpoly", '4,0\t["1"]', '3,1\t["0", "1", "1", "1"]', '2,2\t["0", "0", "1", "0", "1"]']


def test_table_qbinomial(capsys):
    assert main(["table", "q-binomial", "--k", "3"]) == 0
    assert QPoly.from_json(capsys.readouterr().out) == gauss_binomial(6, 3)


def test_table_graded_char_stable(tmp_path):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    assert main(["table", "graded-char", "--N", "4", "--out", str(a)]) == 0
    assert main(["table", "graded-char", "--N", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text() == build_filtration(4).to_tsv()


def test_table_kostka_and_gensegal(capsys):
    assert main(["table", "kostka-foulkes", "--N", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == [{"shape": [2, 0], "coefficients": ["0", "1"]}, {"shape": [1, 1], "coefficients": ["1"]}]
    assert main(["table", "gensegal-matrix", "--k", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sign"] == -1 and len(doc["rows"]) == 6


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "fusionmaj", "list"], capture_output=True, text=True, check=True)
    assert "theorem1" in out.stdout.split()
