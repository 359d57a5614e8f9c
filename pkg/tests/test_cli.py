# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Tests for the command-line interface: JSON output and exit codes.

Run with: pytest tests/test_cli.py -v
"""
import json

import pytest

import utils.run_ledger as run_ledger
from clifford_climb import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, main
from config.settings import settings
from data.models import (
    ClimbReport,
    DecomposeReport,
    EnumerateReport,
    ExpansionReport,
    SurveyReport,
    Verdict,
    VerifySummary,
)
from engine.hierarchy_analyzer import default_oracle
from utils.run_ledger import RunLedger


def circuit(name: str) -> str:
    return str(settings.circuits_dir / name)


def run_json(capsys, model, *argv):
    """Run the CLI with --json and parse stdout into ``model``."""
    code = main([*argv, "--json"])
    return code, model.model_validate_json(capsys.readouterr().out)


# =============================================================================
# TEST: analyze
# =============================================================================

class TestAnalyze:
    """Verdicts for bundled circuits."""

    def test_hadamard_blocked(self, capsys):
        """Test that H is blocked by the (X, Z) obstruction."""
        code, report = run_json(capsys, ClimbReport, "analyze", circuit("hadamard.circ"), "--hat")
        assert code == EXIT_OK
        assert report.verdict == Verdict.BLOCKED_NOT_HYPERBOLIC
        assert report.evidence.obstruction.source == "X"
        assert report.hat_level is None

    def test_swap_root_in_level_three(self, capsys):
        """Test that the root of SWAP is found in level 3."""
        code, report = run_json(capsys, ClimbReport, "analyze", circuit("swap.circ"), "--hat")
        assert code == EXIT_OK
        assert report.verdict == Verdict.CLIMBS
        assert report.hat_level == 3
        assert report.consistent is True

    def test_minus_root(self, capsys):
        """Test that --minus analyzes (I - iU)/√2."""
        code, report = run_json(
            capsys, ClimbReport, "analyze", circuit("cz.circ"), "--hat", "--minus", "--max-level", "3"
        )
        assert code == EXIT_OK
        assert report.hat_sign == -1
        assert report.hat_level == 3

    def test_residue_four(self, capsys):
        """Test that the CNOT pair is blocked by its residue."""
        code, report = run_json(capsys, ClimbReport, "analyze", circuit("cnot_pair.circ"))
        assert code == EXIT_OK
        assert report.verdict == Verdict.BLOCKED_RESIDUE_GT2

    def test_text_output(self, capsys):
        """Test the human-readable report."""
        assert main(["analyze", circuit("cz.circ")]) == EXIT_OK
        out = capsys.readouterr().out
        assert "CLIMB ANALYSIS" in out
        assert "Climbs" in out

    def test_missing_file(self, capsys, tmp_path):
        """Test that a missing file exits with an input error."""
        assert main(["analyze", str(tmp_path / "absent.circ")]) == EXIT_INPUT
        assert "FileNotFoundError" in capsys.readouterr().err

    def test_syntax_error(self, capsys, tmp_path):
        """Test that a parse error exits with an input error."""
        path = tmp_path / "bad.circ"
        path.write_text("qubits 2\nCX(1,1)\n")
        assert main(["analyze", str(path)]) == EXIT_INPUT
        assert "DuplicateQubitError" in capsys.readouterr().err

    def test_non_ascii_qubit_index(self, capsys, tmp_path):
        """A superscript digit exits with an input error naming the position."""
        path = tmp_path / "superscript.circ"
        path.write_text("qubits 2\nCX(¹,2)\n", encoding="utf-8")
        assert main(["analyze", str(path)]) == EXIT_INPUT
        err = capsys.readouterr().err
        assert "CircuitSyntaxError" in err
        assert "line 2, column 4" in err

    def test_hat_needs_hermitian(self, capsys, tmp_path):
        """Test that --hat on S exits with an input error."""
        path = tmp_path / "s.circ"
        path.write_text("qubits 1\nS\n")
        assert main(["analyze", str(path), "--hat"]) == EXIT_INPUT
        assert "NotHermitian" in capsys.readouterr().err

    def test_non_hermitian_without_hat(self, capsys, tmp_path):
        """S without --hat is reported as Unknown."""
        path = tmp_path / "s.circ"
        path.write_text("qubits 1\nS\n")
        code, report = run_json(capsys, ClimbReport, "analyze", str(path))
        assert code == EXIT_OK
        assert report.verdict == Verdict.UNKNOWN

    def test_qubit_cap(self, capsys, monkeypatch):
        """Test that exceeding the qubit cap exits with the budget code."""
        monkeypatch.setattr(settings, "max_qubits", 1)
        assert main(["analyze", circuit("cz.circ")]) == EXIT_BUDGET

    def test_work_budget(self, capsys, monkeypatch):
        """Test that an exhausted work budget exits with the budget code."""
        monkeypatch.setattr(settings, "budget", 1)
        default_oracle().clear()
        assert main(["analyze", circuit("toffoli.circ")]) == EXIT_BUDGET
        assert "❌" in capsys.readouterr().err


# =============================================================================
# TEST: verify, enumerate, expand, decompose, survey
# =============================================================================

class TestCommands:
    """The remaining subcommands."""

    def test_verify_symplectic(self, capsys):
        """Test the symplectic suite on two qubits."""
        code, summary = run_json(capsys, VerifySummary, "verify", "--suite", "symplectic", "-n", "2")
        assert code == EXIT_OK
        assert summary.passed
        assert summary.n == 2
        assert any(c.skipped for c in summary.checks)

    def test_verify_counting(self, capsys):
        """Test the counting suite on three qubits."""
        code, summary = run_json(capsys, VerifySummary, "verify", "--suite", "counting", "-n", "3")
        assert code == EXIT_OK
        assert summary.passed

    def test_enumerate_with_verification(self, capsys):
        """Test that every enumerated member is checked to climb."""
        code, report = run_json(
            capsys, EnumerateReport, "enumerate", "--family", "permutation", "-n", "2", "--verify"
        )
        assert code == EXIT_OK
        assert report.count == report.expected == 3
        assert report.verified is True

    def test_enumerate_diagonal(self, capsys):
        """Test the diagonal family size on three qubits."""
        code, report = run_json(capsys, EnumerateReport, "enumerate", "--family", "diagonal", "-n", "3")
        assert code == EXIT_OK
        assert report.count == 7
        assert report.verified is None

    def test_unknown_family_rejected_by_parser(self):
        """Test that argparse rejects an unknown family."""
        with pytest.raises(SystemExit):
            main(["enumerate", "--family", "rotation", "-n", "2"])

    def test_expand_cz(self, capsys):
        """Test the exact expansion of CZ."""
        code, report = run_json(capsys, ExpansionReport, "expand", circuit("cz.circ"))
        assert code == EXIT_OK
        assert [t.pauli for t in report.terms] == ["II", "IZ", "ZI", "ZZ"]
        assert report.terms[3].exact == [-1, 0, 0, 0, 2]
        assert report.residue_dim == 2
        assert report.subgroup

    def test_decompose_cz(self, capsys):
        """CZ factors into three transvections."""
        code, report = run_json(capsys, DecomposeReport, "decompose", circuit("cz.circ"))
        assert code == EXIT_OK
        assert report.residue_dim == 2
        assert len(report.transvections) == 3
        assert report.reconstructs

    def test_decompose_hadamard_uses_generic_factors(self, capsys):
        code, report = run_json(capsys, DecomposeReport, "decompose", circuit("hadamard.circ"))
        assert code == EXIT_OK
        assert report.reconstructs

    def test_decompose_non_clifford(self, capsys):
        """Test that decomposing a Toffoli exits with an input error."""
        assert main(["decompose", circuit("toffoli.circ")]) == EXIT_INPUT
        assert "NotClifford" in capsys.readouterr().err

    def test_survey(self, capsys):
        """Test the one-qubit survey."""
        code, report = run_json(capsys, SurveyReport, "survey", "-n", "1", "--max-level", "3")
        assert code == EXIT_OK
        assert report.n == 1
        assert report.examined >= 1

    def test_survey_size_limit(self, capsys):
        """Test that a survey beyond the qubit cap exits with the budget code."""
        assert main(["survey", "-n", "9"]) == EXIT_BUDGET

    def test_schema(self, capsys):
        """Test that the published schema describes the verdict."""
        assert main(["schema"]) == EXIT_OK
        schema = json.loads(capsys.readouterr().out)
        assert "verdict" in schema["properties"]


# =============================================================================
# TEST: history
# =============================================================================

class TestHistory:
    """Runs recorded in the ledger."""

    def test_runs_are_recorded(self, capsys, monkeypatch, tmp_path):
        """Test that analyze runs appear in the history with their verdicts."""
        monkeypatch.setattr(settings, "ledger_enabled", True)
        monkeypatch.setattr(run_ledger, "_run_ledger", RunLedger(db_path=tmp_path / "runs.db"))

        main(["analyze", circuit("cz.circ")])
        main(["analyze", str(tmp_path / "absent.circ")])
        capsys.readouterr()

        assert main(["history", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["stats"]["total_runs"] == 2
        assert data["stats"]["failure_count"] == 1
        verdicts = {run["verdict"] for run in data["runs"]}
        assert "Climbs" in verdicts


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
