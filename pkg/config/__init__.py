# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Configuration module."""
from config.settings import settings, ClimbSettings, PROJECT_ROOT

__all__ = ["settings", "ClimbSettings", "PROJECT_ROOT"]
