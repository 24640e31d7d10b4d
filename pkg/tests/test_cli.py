"""Command-line interface: outputs, formats, exit codes."""

import json
import subprocess
import sys

import pytest

from splinebound.cli import (
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    main,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGen:
    def test_json_payload(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "sin", "1", "both", "--digits", "10")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["target"] == "sin"
        assert payload["order"] == 1
        assert len(payload["coefficients_exact"]) == 4
        assert len(payload["coefficients_decimal"]) == 4
        # x^1 coefficient of the order-1 approximant is exactly 1
        assert payload["coefficients_decimal"][1].startswith("1")

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "csv", "gen", "cos", "2")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "power,decimal"
        assert len(lines) == 7  # header + degree-5 polynomial

    def test_text_format(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "text", "gen", "si", "1")
        assert code == EXIT_OK
        assert "si spline approximant, order 1" in out

    def test_out_file(self, tmp_path, capsys):
        dest = tmp_path / "gen.json"
        code, out, _ = run_cli(capsys, "--out", str(dest), "gen", "sin", "0")
        assert code == EXIT_OK
        assert out == ""
        payload = json.loads(dest.read_text())
        assert payload["order"] == 0


class TestBounds:
    def test_certified_lower(self, capsys):
        code, out, _ = run_cli(
            capsys, "--samples", "200", "bounds", "sin", "2", "lower"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["certified"] is True
        assert payload["direction"] == "lower"
        assert float(payload["re_bound"]) == pytest.approx(3.31e-4, rel=2e-2)

    def test_certified_upper_text(self, capsys):
        code, out, _ = run_cli(
            capsys, "--samples", "200", "--format", "text", "bounds", "sin", "2", "upper"
        )
        assert code == EXIT_OK
        assert "pass" in out

    def test_si_upper_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "si", "1", "upper")
        assert code == EXIT_USAGE
        assert "error" in err


class TestTable:
    def test_reproduces(self, capsys):
        code, out, _ = run_cli(capsys, "--samples", "400", "table", "2.1")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload) == 8
        assert all(r["pass"] == "True" for r in payload)

    def test_csv_header(self, capsys):
        code, out, _ = run_cli(
            capsys, "--samples", "400", "--format", "csv", "table", "2.1"
        )
        assert code == EXIT_OK
        assert out.splitlines()[0].startswith("table,order")


class TestFigure:
    def test_csv_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "--samples", "11", "--format", "csv", "figure", "4"
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0].split(",")[0] == "x"
        assert len(lines) == 12

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "--samples", "11", "figure", "2")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["samples"] == 11
        assert "zhu_0_lower" in payload["columns"]


class TestCodegen:
    def test_rounded_kernel(self, capsys):
        code, out, _ = run_cli(
            capsys, "--samples", "300", "codegen", "sin", "2", "--digits", "17"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["horner_coefficients"]) == 6
        assert payload["horner_coefficients"][1] == "1.0"
        # rounding at 17 digits leaves the certified bound at the exact level
        assert float(payload["certified_re_bound"]) == pytest.approx(3.31e-4, rel=2e-2)


class TestUsage:
    def test_low_precision_rejected(self, capsys):
        code, _, err = run_cli(capsys, "--precision", "5", "gen", "sin", "1")
        assert code == EXIT_USAGE
        assert "precision" in err

    def test_low_samples_rejected(self, capsys):
        code, _, err = run_cli(capsys, "--samples", "1", "gen", "sin", "1")
        assert code == EXIT_USAGE

    def test_negative_order_rejected(self, capsys):
        code, _, _ = run_cli(capsys, "gen", "sin", "-2")
        assert code == EXIT_USAGE

    def test_unknown_target(self, capsys):
        code, _, _ = run_cli(capsys, "gen", "tan", "1")
        assert code == EXIT_USAGE

    def test_env_precision_default(self, monkeypatch):
        monkeypatch.setenv("SPLINEBOUND_PRECISION", "77")
        args = build_parser().parse_args(["gen", "sin", "1"])
        assert args.precision == 77


class TestEntryPoint:
    def test_installed_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "splinebound.cli", "gen", "sin", "1", "exact"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["target"] == "sin"
