import json
import os
import subprocess
import sys

import pytest
from jsonschema import Draft202012Validator

from greenquadrics.cli import main, parse_command, run

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "..", "docs", "schema.json")
with open(SCHEMA_PATH) as fh:
    VALIDATOR = Draft202012Validator(json.load(fh))


def test_schema_document_is_valid():
    Draft202012Validator.check_schema(VALIDATOR.schema)


def run_ok(argv):
    code, text = run(argv)
    assert code == 0, text
    return text


def run_json(argv):
    payload = json.loads(run_ok(argv + ["--json"]))
    VALIDATOR.validate(payload)
    return payload


class TestVerdicts:
    def test_classify(self):
        assert run_ok(["classify", "--a", "[1,0;0,1]", "--lambda", "1"]) == "hyperboloid of one sheet"
        out = run_ok(["classify", "--a", "[1,0;0,0]", "--lambda", "0"])
        assert out.startswith("two punctured planes plus origin")
        assert "[0,0;0,1]" in out

    def test_green(self):
        assert run_ok(["green", "--rel", "L", "[1,0;0,0]", "[2,0;3,0]"]) == "true"
        assert run_ok(["green", "--rel", "L", "[1,0;0,0]", "[2,3;0,0]"]) == "false"

    def test_json_text_agree(self):
        payload = run_json(["classify", "--a", "[1,0;0,1]", "--lambda", "1"])
        assert payload["kind"] == run_ok(["classify", "--a", "[1,0;0,1]", "--lambda", "1"])
        payload = run_json(["green", "--rel", "R", "[1,0;0,0]", "[2,3;0,0]"])
        assert payload["related"] is True

    def test_order(self):
        text = run_ok(["order", "[1,0;0,0]", "[1,0;0,1]"])
        assert "natural_le: true" in text and "minus_le:   true" in text
        payload = run_json(["order", "[1/2,0;0,0]", "[2,0;0,1/2]"])
        assert payload["natural_le"] is False and payload["minus_le"] is False

    def test_order_report(self):
        payload = run_json(["order", "--report", "[2,0;0,1/2]", "--trials", "30", "--seed", "4"])
        assert payload["command"] == "order-report"
        assert payload["agree_le_vs_inv_section"] == 30
        assert payload["counterexamples"] == []

    def test_lines_plane_inverses_metrics_bell(self):
        payload = run_json(["lines", "--e", "[1,0;0,0]"])
        assert payload["lines"][0]["direction"] == "[0,0;1,0]"
        payload = run_json(["plane", "[1,0;0,0]", "[0,0;1,0]"])
        assert payload["kind"] == "L"
        payload = run_json(["inverses", "--a", "[0,1;0,0]", "--grid", "2"])
        assert {"s": "0", "t": "0", "x": "[0,0;1,0]"} in payload["grid"]
        payload = run_json(["metrics", "--lambda", "3"])
        assert payload["center"] == "[3/2,0;0,3/2]" and payload["radius_sq"] == "9/2"
        payload = run_json(["bell", "--lambda", "1", "--point", "[1,0;0,0]"])
        assert payload["X"] == "1/2*sqrt2"
        payload = run_json(["bell", "--lambda", "1", "--from", "1/2*sqrt2,0,0"])
        assert payload["x1"] == "1" and payload["x4"] == "0"

    def test_float_rendering(self):
        code, text = run(["bell", "--lambda", "1", "--point", "[1,0;0,0]", "--float"])
        assert code == 0 and "0.7071067811865476" in text


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["classify", "--a", "[1,0;0,1]", "--lambda", "1"],
            ["green", "--rel", "H", "[1,0;0,0]", "[1,0;0,0]"],
            ["metrics", "--lambda=-2"],
            ["order", "[0,0;0,0]", "[1,0;0,1]"],
        ],
    )
    def test_success_is_zero(self, argv):
        assert run(argv)[0] == 0

    @pytest.mark.parametrize(
        "argv",
        [
            ["classify", "--a", "[1,0;0,1]"],               # missing --lambda
            ["classify", "--a", "[1,0;0]", "--lambda", "1"],  # arity
            ["classify", "--a", "[1,0;0,1/0]", "--lambda", "1"],  # zero denominator
            ["green", "--rel", "X", "[1,0;0,0]", "[1,0;0,0]"],    # bad relation
            ["nonsense"],
            ["order", "[1,0;0,0]"],                          # missing second matrix
            ["bell", "--lambda", "1", "--from", "1,2"],      # arity of coords
            ["export", "--kind", "section", "--out", "x.csv"],  # missing --a/--lambda
            ["inverses", "--a", "[1,0;0,0]", "--grid", "0"],
        ],
    )
    def test_usage_errors_are_one(self, argv):
        assert run(argv)[0] == 1

    @pytest.mark.parametrize(
        "argv",
        [
            ["inverses", "--a", "[1,0;0,1]"],            # invertible: no rank-1 chart
            ["lines", "--e", "[1,0;0,1]"],               # not a rank-1 idempotent
            ["lines", "--e", "[2,0;0,0]"],
            ["order", "--report", "[1,0;0,0]"],           # singular a
            ["plane", "[1,0;0,0]", "[2,0;0,0]"],          # dependent basis
            ["bell", "--lambda", "2", "--point", "[1,0;0,0]"],  # off the hyperplane
        ],
    )
    def test_domain_errors_are_two(self, argv):
        assert run(argv)[0] == 2

    def test_main_prints_to_stderr_on_error(self, capsys):
        code = main(["lines", "--e", "[1,0;0,1]"])
        captured = capsys.readouterr()
        assert code == 2 and "domain error" in captured.err


class TestCommandRoundTrip:
    @pytest.mark.parametrize(
        "argv",
        [
            ["classify", "--a", "[ 1 , 0 ; 0 , 1 ]", "--lambda", "2/2"],
            ["green", "--rel", "L", "[1,0;0,0]", "[2,0;3,0]"],
            ["inverses", "--a", "[0,1;0,0]", "--grid", "4", "--json"],
            ["order", "[1,0;0,0]", "[1,0;0,1]"],
            ["order", "--report", "[2,0;0,1/2]", "--trials", "50", "--seed", "3"],
            ["lines", "--e", "[1,0;0,0]"],
            ["plane", "[1,0;0,0]", "[0,0;1,0]", "--json"],
            ["bell", "--lambda", "1", "--point", "[1/2,1/2;1/2,1/2]"],
            ["bell", "--lambda", "3", "--from", "1/2*sqrt2, 0, -1 + 2*sqrt2"],
            ["metrics", "--lambda", "7/2", "--float"],
            ["export", "--kind", "idempotents", "--samples", "10", "--seed", "1", "--out", "o.csv"],
            ["export", "--kind", "section", "--a", "[1,0;0,0]", "--lambda", "1",
             "--samples", "5", "--seed", "2", "--format", "obj", "--out", "o.obj",
             "--z-range=-1.5:2.5"],
            ["check", "--seed", "42", "--suite", "exact", "--suite", "core"],
        ],
    )
    def test_canonical_roundtrip(self, argv):
        cmd = parse_command(argv)
        assert parse_command(cmd.to_argv()) == cmd

    def test_canonicalization_normalizes_literals(self):
        cmd = parse_command(["classify", "--a", "[ 2/4 , 0 ; 0 , 1 ]", "--lambda", "3/3"])
        assert "--a" in cmd.to_argv() and "[1/2,0;0,1]" in cmd.to_argv()
        assert "1" in cmd.to_argv()


class TestCheckAndExportCli:
    def test_check_suite_runs(self):
        code, text = run(["check", "--seed", "1", "--suite", "exact", "--trials", "50"])
        assert code == 0
        assert text.count("[pass]") == 3

    def test_check_json_schema(self):
        payload = run_json(["check", "--seed", "1", "--suite", "exact", "--trials", "20"])
        assert payload["passed"] == payload["total"] == 3

    def test_check_reproducible_in_process(self):
        a = run(["check", "--seed", "5", "--suite", "green", "--trials", "60"])
        b = run(["check", "--seed", "5", "--suite", "green", "--trials", "60"])
        assert a == b

    def test_export_csv(self, tmp_path):
        out = str(tmp_path / "pts.csv")
        code, text = run(
            ["export", "--kind", "idempotents", "--samples", "25", "--seed", "3", "--out", out]
        )
        assert code == 0 and os.path.exists(out)
        assert "wrote 25 points" in text

    def test_export_obj_full_variety_is_domain_error(self, tmp_path):
        out = str(tmp_path / "x.obj")
        code, _ = run(
            ["export", "--kind", "section", "--a", "[0,0;0,0]", "--lambda", "0",
             "--samples", "5", "--seed", "1", "--format", "obj", "--out", out]
        )
        assert code == 2

    def test_trials_env_override(self):
        env = dict(os.environ, GQ_DEFAULT_TRIALS="25")
        proc = subprocess.run(
            [sys.executable, "-m", "greenquadrics", "check", "--seed", "1", "--suite", "exact"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert proc.returncode == 0
        assert "25/25 trials ok" in proc.stdout
