# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Configuration for the exact hierarchy analyzer.

Every field can be overridden with a ``CLIMB_``-prefixed environment variable
or a ``.env`` file, e.g. ``CLIMB_BUDGET=500000`` or ``CLIMB_MAX_QUBITS=6``.
"""
from pathlib import Path
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent


class ClimbSettings(BaseSettings):
    """Runtime limits and paths for analysis runs."""

    model_config = SettingsConfigDict(
        env_prefix="CLIMB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # ==========================================================================
    # API Configuration
    # ==========================================================================
    api_host: str = Field(default="0.0.0.0")
    api_port: int = Field(default=8000)

    # ==========================================================================
    # Feasibility Limits
    # ==========================================================================
    max_qubits: int = Field(default=5, ge=1)
    max_level: int = Field(default=4, ge=1)
    budget: int = Field(default=2_000_000, ge=1)  # dense conjugations per call

    # ==========================================================================
    # Membership Memo
    # ==========================================================================
    memo_size: int = Field(default=50_000, ge=0)

    # ==========================================================================
    # Sampling
    # ==========================================================================
    random_seed: int = Field(default=20250)

    # ==========================================================================
    # Run Ledger
    # ==========================================================================
    ledger_enabled: bool = Field(default=True)

    # ==========================================================================
    # Data Directories
    # ==========================================================================
    @property
    def data_dir(self) -> Path:
        """Base data directory."""
        return PROJECT_ROOT / "data_store"

    @property
    def ledger_path(self) -> Path:
        """SQLite run ledger path."""
        return self.data_dir / "run_ledger.db"

    @property
    def circuits_dir(self) -> Path:
        """Bundled example circuits."""
        return PROJECT_ROOT / "circuits"

    def ensure_directories(self):
        """Create all necessary directories."""
        self.data_dir.mkdir(parents=True, exist_ok=True)


# Global settings instance
settings = ClimbSettings()
