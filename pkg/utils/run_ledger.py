# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""SQLite ledger of analysis runs.

Each CLI command and API request is stored with its exit code, verdict and
the limits it ran under, so long searches can be compared across
configurations.
"""
import json
import sqlite3
import uuid
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.settings import settings

COLUMNS = ("id", "timestamp", "command", "target", "exit_code", "verdict", "runtime_ms", "error", "metadata")

SCHEMA = """
CREATE TABLE IF NOT EXISTS runs (
    id TEXT PRIMARY KEY,
    timestamp TEXT NOT NULL,
    command TEXT NOT NULL,
    target TEXT,
    exit_code INTEGER,
    verdict TEXT,
    runtime_ms REAL,
    error TEXT,
    metadata TEXT
);
CREATE INDEX IF NOT EXISTS idx_runs_timestamp ON runs(timestamp);
"""


def current_limits() -> Dict[str, Any]:
    """The configuration a run was made under."""
    return {
        "max_qubits": settings.max_qubits,
        "max_level": settings.max_level,
        "budget": settings.budget,
    }


class RunLedger:
    """Append-only table of runs in one SQLite file."""

    def __init__(self, db_path: Optional[Path] = None):
        if db_path is None:
            settings.ensure_directories()
            db_path = settings.ledger_path
        self.db_path = Path(db_path)
        with self._connect() as conn:
            conn.executescript(SCHEMA)

    @contextmanager
    def _connect(self):
        conn = sqlite3.connect(str(self.db_path))
        conn.row_factory = sqlite3.Row
        try:
            yield conn
            conn.commit()
        finally:
            conn.close()

    def log_run(
        self,
        command: str,
        target: Optional[str] = None,
        exit_code: int = 0,
        verdict: Optional[str] = None,
        runtime_ms: Optional[float] = None,
        error: Optional[str] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> str:
        """Append one run and return its id."""
        row = (
            str(uuid.uuid4()),
            datetime.now(timezone.utc).isoformat(),
            command,
            target,
            exit_code,
            verdict,
            runtime_ms,
            error,
            json.dumps(metadata) if metadata else None,
        )
        placeholders = ", ".join("?" * len(COLUMNS))
        with self._connect() as conn:
            conn.execute(f"INSERT INTO runs ({', '.join(COLUMNS)}) VALUES ({placeholders})", row)
        return row[0]

    def get_recent_runs(self, limit: int = 20) -> List[Dict[str, Any]]:
        """Newest runs first, metadata decoded."""
        with self._connect() as conn:
            rows = conn.execute("SELECT * FROM runs ORDER BY timestamp DESC LIMIT ?", (limit,)).fetchall()
        runs = []
        for row in rows:
            run = dict(row)
            run["metadata"] = json.loads(run["metadata"]) if run["metadata"] else None
            runs.append(run)
        return runs

    def get_stats(self) -> Dict[str, Any]:
        """Totals, failure rate, mean runtime and verdict counts."""
        with self._connect() as conn:
            total, failures, avg_ms = conn.execute(
                "SELECT COUNT(*), COALESCE(SUM(exit_code != 0), 0), AVG(runtime_ms) FROM runs"
            ).fetchone()
            verdicts = conn.execute(
                "SELECT verdict, COUNT(*) FROM runs WHERE verdict IS NOT NULL GROUP BY verdict"
            ).fetchall()
        return {
            "total_runs": total,
            "failure_count": failures,
            "failure_rate": failures / total if total else 0.0,
            "avg_runtime_ms": avg_ms or 0.0,
            "verdicts": {verdict: count for verdict, count in verdicts},
        }


_run_ledger: Optional[RunLedger] = None


def get_run_ledger() -> RunLedger:
    global _run_ledger
    if _run_ledger is None:
        _run_ledger = RunLedger()
    return _run_ledger


def log_run(**kwargs) -> Optional[str]:
    """Record a run with the current limits unless the ledger is disabled."""
    if not settings.ledger_enabled:
        return None
    kwargs.setdefault("metadata", current_limits())
    return get_run_ledger().log_run(**kwargs)
