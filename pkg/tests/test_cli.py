"""CLI commands: outputs, determinism, exit codes."""

import math
from pathlib import Path

import pytest
from click.testing import CliRunner

from chebybound.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def _run(runner, args):
    result = runner.invoke(main, args, catch_exceptions=False)
    return result


class TestZerosCommand:
    def test_writes_table_and_figure(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "zeros", "--height", "30"])
        assert res.exit_code == 0
        table = tmp_path / "zeros_h30.txt"
        assert table.exists()
        assert (tmp_path / "zeros_h30.png").exists()
        text = table.read_text()
        assert "# height=30" in text
        assert text.count("\n") >= 3  # headers + at least two zeros

    def test_no_figures_flag(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "--no-figures",
                            "zeros", "--height", "30"])
        assert res.exit_code == 0
        assert not (tmp_path / "zeros_h30.png").exists()

    def test_bad_height_is_config_error(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "zeros", "--height", "5"])
        assert res.exit_code == 2


class TestTableCommand:
    def test_family_a_rows(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "table", "--families", "a",
                            "--grid", "18.42,50"])
        assert res.exit_code == 0
        tsv = tmp_path / "epsilon_family_a.tsv"
        lines = tsv.read_text().strip().splitlines()
        assert lines[0].split("\t")[0] == "b"
        assert len(lines) == 3
        assert (tmp_path / "epsilon_family_a.png").exists()

    def test_deterministic_bytes(self, runner, tmp_path):
        args = ["--out", str(tmp_path), "--no-figures", "table",
                "--families", "a", "--grid", "20,40"]
        _run(runner, args)
        first = (tmp_path / "epsilon_family_a.tsv").read_bytes()
        _run(runner, args)
        assert (tmp_path / "epsilon_family_a.tsv").read_bytes() == first


class TestEtaCommand:
    def test_report(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "--no-figures", "eta"])
        assert res.exit_code == 0
        tsv = tmp_path / "eta_coefficients.tsv"
        body = tsv.read_text()
        assert "psi\t1\t" in body
        assert "theta\t1\t" in body


class TestVerifyCommand:
    def test_small_scan_ok(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "--no-figures", "verify",
                            "--limit", "100000",
                            "--ids", "pereira-gap-upper,pereira-sandwich-upper"])
        assert res.exit_code == 0
        body = (tmp_path / "verification.tsv").read_text()
        assert "pereira-gap-upper" in body

    def test_unknown_id_config_error(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "verify", "--ids", "nope"])
        assert res.exit_code == 2


class TestEpsCommand:
    def test_exact_small_case(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "eps", "3"])
        assert res.exit_code == 0
        # |psi(3) - 3| / 3 with psi(3) = log 6
        expected = abs(math.log(6.0) - 3.0) / 3.0
        value = float(res.output.split("epsilon=")[1].split()[0])
        assert value == pytest.approx(expected, rel=1e-12)
        assert "exact-sieve" in res.output

    def test_table_row_at_e50(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "eps", str(math.exp(50.0))])
        assert res.exit_code == 0
        value = float(res.output.split("epsilon=")[1].split()[0])
        assert value == pytest.approx(1.30131e-9, rel=0.05)
        assert "table[b=50]" in res.output

    def test_asymptotic_provenance_at_e6000(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "eps", "6000", "--log"])
        assert res.exit_code == 0
        assert "provenance=half-power" in res.output or \
            "provenance=refined" in res.output

    def test_invalid_x(self, runner, tmp_path):
        res = _run(runner, ["--out", str(tmp_path), "eps", "0.5"])
        assert res.exit_code == 2


class TestExitCodes:
    def test_bad_mode_rejected(self, runner, tmp_path):
        res = runner.invoke(main, ["--mode", "bogus", "zeros"])
        assert res.exit_code == 2
