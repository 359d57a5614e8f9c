# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Work budget for exponential searches.

Level checks cost one unit per dense conjugation U·P·U†. Public entry points
are wrapped in ``metered`` so that nested calls share one counter; the
outermost call resets it from ``settings.budget``.
"""
import threading
from contextlib import contextmanager
from functools import wraps
from typing import Dict, Optional

from config.settings import settings


class WorkBudget:
    """Counter of work units with a hard limit."""

    def __init__(self, limit: Optional[int] = None):
        """Initialize budget.

        Args:
            limit: Maximum units. Defaults to ``settings.budget``.
        """
        self.limit = limit if limit is not None else settings.budget
        self.used = 0
        self._depth = 0

    def charge(self, units: int = 1):
        """Consume units, raising once the limit is passed.

        Args:
            units: Number of work units to consume

        Raises:
            BudgetExceeded: If the running total exceeds the limit
        """
        self.used += units
        if self.used > self.limit:
            raise BudgetExceeded(
                f"Work budget exhausted: {self.used} > {self.limit} units "
                f"(raise CLIMB_BUDGET to allow more)"
            )

    @property
    def remaining(self) -> int:
        return max(0, self.limit - self.used)

    def reset(self, limit: Optional[int] = None):
        """Start a fresh count.

        Args:
            limit: New limit. Defaults to ``settings.budget``.
        """
        self.limit = limit if limit is not None else settings.budget
        self.used = 0

    def usage(self) -> Dict[str, int]:
        """Return limit and units used."""
        return {"limit": self.limit, "used": self.used}

    @contextmanager
    def scope(self):
        """Enter a metered scope; only the outermost scope resets the counter."""
        if self._depth == 0:
            self.reset()
        self._depth += 1
        try:
            yield self
        finally:
            self._depth -= 1


# Thread-local instance
_local = threading.local()

def get_budget() -> WorkBudget:
    """Get or create the budget for the current thread."""
    budget = getattr(_local, "budget", None)
    if budget is None:
        budget = WorkBudget()
        _local.budget = budget
    return budget


def ensure_within_limits(n: Optional[int] = None, level: Optional[int] = None):
    """Reject problem sizes beyond the configured caps.

    Args:
        n: Number of qubits
        level: Hierarchy level requested

    Raises:
        BudgetExceeded: If n or level is above its cap
    """
    if n is not None and n > settings.max_qubits:
        raise BudgetExceeded(
            f"{n} qubits requested, configured maximum is {settings.max_qubits} "
            f"(CLIMB_MAX_QUBITS)"
        )
    if level is not None and level > settings.max_level:
        raise BudgetExceeded(
            f"level {level} requested, configured maximum is {settings.max_level} "
            f"(CLIMB_MAX_LEVEL)"
        )


def metered(func):
    """Decorator that runs a function inside the thread's budget scope."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        with get_budget().scope():
            return func(*args, **kwargs)
    return wrapper


class BudgetExceeded(Exception):
    """Exception raised when a computation exceeds its configured limits."""
    pass


if __name__ == "__main__":
    print("Testing work budget...")

    budget = WorkBudget(limit=5)
    for i in range(7):
        try:
            budget.charge()
            print(f"Unit {i+1}: charged ({budget.remaining} left)")
        except BudgetExceeded as exc:
            print(f"Unit {i+1}: blocked - {exc}")
