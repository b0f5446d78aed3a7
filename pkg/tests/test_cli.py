# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

import json

import pytest

from src.app import EXIT_CONFIG_ERROR, EXIT_FAILURE, EXIT_OK, PMMeasApp
from src.config import ALL_SUITES, DEFAULT_SEED
from src.suites import SUITES
from src.views import strip_timing


def _run(*argv):
    return PMMeasApp().run(list(argv))


def _read_json(path):
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


class TestVerify:

    def test_ddf_suite_report(self, no_config_files):
        out = no_config_files / "report.json"
        assert _run("-q", "verify", "--suite", "ddf", "--out", str(out)) == EXIT_OK
        report = _read_json(out)
        assert set(report) == {"schema_version", "config", "claims", "suites", "passed", "timing"}
        assert report["passed"]
        assert [s["name"] for s in report["suites"]] == ["ddf"]
        assert report["claims"]["ddf"] == SUITES["ddf"].claim

    def test_report_is_deterministic(self, no_config_files):
        first, second = no_config_files / "a.json", no_config_files / "b.json"
        for out in (first, second):
            assert _run("-q", "verify", "--suite", "ddf,scalar", "--seed", "11", "--out", str(out)) == EXIT_OK
        assert strip_timing(_read_json(first)) == strip_timing(_read_json(second))

    def test_empty_suite_list(self, no_config_files):
        out = no_config_files / "empty.json"
        assert _run("-q", "verify", "--suite", "", "--out", str(out)) == EXIT_OK
        report = _read_json(out)
        assert report["suites"] == []
        assert report["passed"]

    def test_report_on_stdout(self, no_config_files, capsys):
        assert _run("-q", "verify", "--suite", "ddf", "--out", "-") == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["config"]["seed"] == DEFAULT_SEED
        assert report["passed"]

    def test_unknown_suite(self, no_config_files):
        assert _run("-q", "verify", "--suite", "ddf,nope") == EXIT_CONFIG_ERROR

    def test_missing_config(self, no_config_files):
        assert _run("-q", "--config", str(no_config_files / "absent.yaml"), "verify") == EXIT_CONFIG_ERROR

    def test_bad_arguments(self, no_config_files):
        assert _run("verify", "--seed", "many") == EXIT_CONFIG_ERROR
        assert _run() == EXIT_CONFIG_ERROR

    def test_missing_output_directory(self, no_config_files):
        out = no_config_files / "missing" / "report.json"
        assert _run("-q", "verify", "--suite", "", "--out", str(out)) == EXIT_FAILURE


class TestExplore:

    def test_pi_top_violation_found(self, no_config_files):
        out = no_config_files / "explore.json"
        code = _run("-q", "explore", "--mode", "find-pi-top-violation", "--weights", "1", "2",
                    "--seed", "3", "--out", str(out))
        assert code == EXIT_OK
        report = _read_json(out)
        assert report["mode"] == "find-pi-top-violation"
        assert report["result"]["found"]
        witness = report["result"]["witness"]
        assert witness["mu_union"] == pytest.approx(witness["mu_E"] + witness["mu_F"])

    def test_zero_budget(self, no_config_files):
        assert _run("-q", "explore", "--mode", "find-pi-top-violation", "--budget", "0") == EXIT_CONFIG_ERROR

    def test_unknown_mode(self, no_config_files):
        assert _run("-q", "explore", "--mode", "guess") == EXIT_CONFIG_ERROR


class TestExport:

    def test_dirac_csv(self, no_config_files):
        out = no_config_files / "eps1.csv"
        assert _run("-q", "export", "--what", "eps:1", "--out", str(out), "--x-max", "2", "--step", "0.1") == EXIT_OK
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "x,F(x)"
        assert len(lines) == 22
        assert lines[-1].endswith(",1")

    def test_lambda_target(self, no_config_files):
        out = no_config_files / "lambda.csv"
        assert _run("-q", "export", "--what", "lambda:5:3:{0,2}", "--out", str(out)) == EXIT_OK
        assert out.exists()

    def test_unknown_target(self, no_config_files):
        out = no_config_files / "x.csv"
        assert _run("-q", "export", "--what", "gauss:1", "--out", str(out)) == EXIT_CONFIG_ERROR

    def test_missing_output_directory(self, no_config_files):
        out = no_config_files / "missing" / "eps.csv"
        assert _run("-q", "export", "--what", "eps:1", "--out", str(out)) == EXIT_FAILURE


def test_every_suite_is_registered():
    assert list(SUITES) == list(ALL_SUITES)
