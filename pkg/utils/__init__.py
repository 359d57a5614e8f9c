# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Utility modules for budgets and run records."""
from utils.budget import (
    WorkBudget,
    BudgetExceeded,
    get_budget,
    metered,
    ensure_within_limits,
)
from utils.run_ledger import RunLedger, get_run_ledger, log_run

__all__ = [
    "WorkBudget",
    "BudgetExceeded",
    "get_budget",
    "metered",
    "ensure_within_limits",
    "RunLedger",
    "get_run_ledger",
    "log_run",
]
