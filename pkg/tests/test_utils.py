# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Tests for the work budget and the run ledger.

Run with: pytest tests/test_utils.py -v
"""
import pytest

import utils.run_ledger as run_ledger
from config.settings import settings
from utils.budget import (
    BudgetExceeded,
    WorkBudget,
    ensure_within_limits,
    get_budget,
    metered,
)
from utils.run_ledger import RunLedger, log_run


# =============================================================================
# TEST: Work budget
# =============================================================================

class TestWorkBudget:
    """Charging, limits and nested scopes."""

    def test_charge_until_limit(self):
        """Charging past the limit raises BudgetExceeded."""
        budget = WorkBudget(limit=3)
        budget.charge(3)
        assert budget.remaining == 0
        with pytest.raises(BudgetExceeded):
            budget.charge()

    def test_default_limit_from_settings(self, monkeypatch):
        """Test that the default limit is read from CLIMB_BUDGET."""
        monkeypatch.setattr(settings, "budget", 42)
        assert WorkBudget().limit == 42

    def test_usage(self):
        budget = WorkBudget(limit=10)
        budget.charge(4)
        assert budget.usage() == {"limit": 10, "used": 4}
        budget.reset(5)
        assert budget.usage() == {"limit": 5, "used": 0}

    def test_nested_scopes_share_the_count(self):
        """A metered call inside another charges the outer budget."""
        @metered
        def inner():
            get_budget().charge(2)
            return get_budget().used

        @metered
        def outer():
            get_budget().charge(1)
            return inner()

        assert outer() == 3
        assert inner() == 2

    def test_scope_resets_after_failure(self, monkeypatch):
        """Test that an exhausted scope does not leak into the next call."""
        monkeypatch.setattr(settings, "budget", 2)

        @metered
        def greedy():
            get_budget().charge(3)

        with pytest.raises(BudgetExceeded):
            greedy()
        with pytest.raises(BudgetExceeded):
            greedy()

    def test_limits(self, monkeypatch):
        """Qubit and level caps."""
        monkeypatch.setattr(settings, "max_qubits", 3)
        monkeypatch.setattr(settings, "max_level", 3)
        ensure_within_limits(3, 3)
        with pytest.raises(BudgetExceeded):
            ensure_within_limits(n=4)
        with pytest.raises(BudgetExceeded):
            ensure_within_limits(level=4)


# =============================================================================
# TEST: Run ledger
# =============================================================================

class TestRunLedger:
    """SQLite record of runs."""

    def test_log_and_read_back(self, tmp_path):
        """Test that a logged run comes back with its metadata decoded."""
        ledger = RunLedger(db_path=tmp_path / "runs.db")
        run_id = ledger.log_run(
            command="analyze",
            target="circuits/cz.circ",
            verdict="Climbs",
            runtime_ms=12.5,
            metadata={"max_level": 4},
        )
        runs = ledger.get_recent_runs()
        assert len(runs) == 1
        assert runs[0]["id"] == run_id
        assert runs[0]["verdict"] == "Climbs"
        assert runs[0]["metadata"] == {"max_level": 4}

    def test_stats(self, tmp_path):
        """Failures, mean runtime and verdict counts."""
        ledger = RunLedger(db_path=tmp_path / "runs.db")
        ledger.log_run(command="analyze", exit_code=0, verdict="Climbs", runtime_ms=10.0)
        ledger.log_run(command="verify", exit_code=3, runtime_ms=30.0)
        ledger.log_run(command="analyze", exit_code=1, error="bad input")
        ledger.log_run(command="analyze", verdict="Climbs")
        stats = ledger.get_stats()
        assert stats["total_runs"] == 4
        assert stats["failure_count"] == 2
        assert stats["failure_rate"] == pytest.approx(0.5)
        assert stats["avg_runtime_ms"] == pytest.approx(20.0)
        assert stats["verdicts"] == {"Climbs": 2}

    def test_empty_stats(self, tmp_path):
        stats = RunLedger(db_path=tmp_path / "runs.db").get_stats()
        assert stats["total_runs"] == 0
        assert stats["failure_count"] == 0
        assert stats["failure_rate"] == 0.0

    def test_limit(self, tmp_path):
        ledger = RunLedger(db_path=tmp_path / "runs.db")
        for i in range(5):
            ledger.log_run(command=f"cmd{i}")
        assert len(ledger.get_recent_runs(limit=2)) == 2

    def test_disabled_ledger(self):
        """Nothing is written when CLIMB_LEDGER_ENABLED is false."""
        assert log_run(command="analyze") is None

    def test_runs_carry_current_limits(self, monkeypatch, tmp_path):
        """log_run stores the limits in force when no metadata is given."""
        ledger = RunLedger(db_path=tmp_path / "runs.db")
        monkeypatch.setattr(settings, "ledger_enabled", True)
        monkeypatch.setattr(settings, "max_qubits", 3)
        monkeypatch.setattr(run_ledger, "_run_ledger", ledger)
        log_run(command="analyze", verdict="Climbs")
        metadata = ledger.get_recent_runs()[0]["metadata"]
        assert metadata == {"max_qubits": 3, "max_level": settings.max_level, "budget": settings.budget}


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
