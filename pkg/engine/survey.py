# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Survey of where the roots of Hermitian Cliffords land.

For n ≤ 2 every symplectic involution of Sp(2n) with a Hermitian lift is
examined; from n = 3 on, the Hermitian diagonal and permutation Cliffords.
Obstruction-free gates get the level of their root searched directly. The
tabulated levels are data, not claims.
"""
import time
from collections import Counter
from typing import Iterator, Optional, Tuple

from tqdm import tqdm

from algebra.exact_matrix import ExactUnitary
from algebra.symplectic_core import (
    enumerate_symplectic_group,
    is_hyperbolic,
    is_involution,
    residue_space,
)
from config.settings import settings
from data.models import SurveyReport, SurveyRow
from engine.clifford_engine import (
    hermitian_diagonal_members,
    hermitian_lift,
    hermitian_permutation_members,
)
from engine.hierarchy_analyzer import hat, min_level
from utils.budget import BudgetExceeded

MAX_SURVEY_QUBITS = 4


def _sp_involutions(n: int) -> Iterator[Tuple[str, ExactUnitary, int, bool]]:
    for f in enumerate_symplectic_group(n):
        if f.is_identity() or not is_involution(f):
            continue
        u = hermitian_lift(f)
        if u is not None:
            yield "sp_involution", u, residue_space(f).dim, is_hyperbolic(f)


def _family_gates(n: int) -> Iterator[Tuple[str, ExactUnitary, int, bool]]:
    for member in hermitian_diagonal_members(n):
        if member.residue_dim:
            yield "diagonal", member.unitary, member.residue_dim, True
    for member in hermitian_permutation_members(n):
        if member.residue_dim:
            yield "permutation", member.unitary, member.residue_dim, True


def run_survey(n: int, max_level: Optional[int] = None, progress: bool = False) -> SurveyReport:
    """Tabulate root levels of obstruction-free Hermitian Cliffords on n qubits.

    Args:
        n: Register size (1..4)
        max_level: Highest level searched for each root
        progress: Show a progress bar

    Returns:
        SurveyReport with one row per (source, residue dim, root level)

    Raises:
        BudgetExceeded: n above the survey limit or a search ran out of budget
    """
    if n < 1 or n > MAX_SURVEY_QUBITS:
        raise BudgetExceeded(f"survey supports 1 <= n <= {MAX_SURVEY_QUBITS}, got {n}")
    max_level = settings.max_level if max_level is None else max_level
    start = time.time()

    gates = list(_sp_involutions(n) if n <= 2 else _family_gates(n))
    table: Counter = Counter()
    obstructed = 0
    for source, u, r, hyperbolic in tqdm(gates, desc=f"survey n={n}", disable=not progress):
        if not hyperbolic:
            obstructed += 1
            continue
        table[(source, r, min_level(hat(u), max_level))] += 1

    rows = [
        SurveyRow(source=source, residue_dim=r, hat_level=level, count=count)
        for (source, r, level), count in sorted(
            table.items(), key=lambda item: (item[0][0], item[0][1], item[0][2] or 0)
        )
    ]
    return SurveyReport(
        n=n,
        max_level=max_level,
        examined=len(gates),
        obstructed=obstructed,
        rows=rows,
        elapsed_ms=(time.time() - start) * 1000,
    )
