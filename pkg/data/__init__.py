"""Report models."""
from data.models import (
    Verdict,
    CliffordData,
    ObstructionPair,
    Evidence,
    BudgetUsage,
    ClimbReport,
    PauliTermModel,
    ExpansionReport,
    DecomposeReport,
    CheckResult,
    VerifySummary,
    FamilyMemberModel,
    EnumerateReport,
    SurveyRow,
    SurveyReport,
    RunRecord,
    climb_report_schema,
)

__all__ = [
    "Verdict",
    "CliffordData",
    "ObstructionPair",
    "Evidence",
    "BudgetUsage",
    "ClimbReport",
    "PauliTermModel",
    "ExpansionReport",
    "DecomposeReport",
    "CheckResult",
    "VerifySummary",
    "FamilyMemberModel",
    "EnumerateReport",
    "SurveyRow",
    "SurveyReport",
    "RunRecord",
    "climb_report_schema",
]
