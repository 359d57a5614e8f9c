"""Shared fixtures: keep test runs out of the run ledger."""
import pytest

from config.settings import settings


@pytest.fixture(autouse=True)
def no_ledger(monkeypatch):
    monkeypatch.setattr(settings, "ledger_enabled", False)
