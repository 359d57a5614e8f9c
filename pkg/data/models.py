"""Report models for analysis results and their published JSON schema."""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


# ============================================================================
# Climb Analysis
# ============================================================================

class Verdict(str, Enum):
    """Outcome of the climb analysis for a Hermitian gate."""
    CLIMBS = "Climbs"
    BLOCKED_NOT_HYPERBOLIC = "BlockedNotHyperbolic"
    BLOCKED_RESIDUE_GT2 = "BlockedResidueGT2"
    BLOCKED_OBSTRUCTION_PAIR = "BlockedObstructionPair"
    UNKNOWN = "Unknown"


class CliffordData(BaseModel):
    """Symplectic data of a Clifford gate."""
    F: List[str] = Field(..., description="Rows of the symplectic matrix as bitstrings (x|z)")
    images: List[str] = Field(..., description="Conjugates of X_1..X_n, Z_1..Z_n as Pauli labels")
    hyperbolic: bool
    involution: bool
    residue_dim: int
    residue_basis: List[str] = Field(default_factory=list)


class ObstructionPair(BaseModel):
    """Anticommuting Hermitian Paulis E, E' with U E U = E'."""
    source: str
    image: str


class Evidence(BaseModel):
    """What the verdict rests on."""
    obstruction: Optional[ObstructionPair] = None
    residue_basis: List[str] = Field(default_factory=list)
    transvections: List[str] = Field(default_factory=list)
    note: Optional[str] = None


class BudgetUsage(BaseModel):
    limit: int
    used: int


class ClimbReport(BaseModel):
    """Complete analysis of a gate and its square root (I + iU)/√2."""
    input: str = Field(..., description="Circuit file or gate description")
    n: int = Field(..., ge=1)
    hermitian: bool
    min_level: Optional[int] = Field(default=None, description="Smallest level found within max_level")
    max_level: int = Field(..., description="Largest level searched")
    clifford: Optional[CliffordData] = None
    verdict: Verdict
    trivial: bool = Field(default=False, description="Climbs because the gate is a Pauli up to phase")
    evidence: Evidence = Field(default_factory=Evidence)
    hat_level: Optional[int] = Field(default=None, description="Smallest level of the root within max_level")
    hat_sign: int = Field(default=1, description="+1 for (I + iU)/√2, -1 for (I - iU)/√2")
    consistent: Optional[bool] = Field(
        default=None, description="Verdict agrees with the direct level search of the root"
    )
    budget: Optional[BudgetUsage] = None


# ============================================================================
# Pauli Expansion / Decomposition
# ============================================================================

class PauliTermModel(BaseModel):
    pauli: str
    coeff: str
    exact: List[int] = Field(..., description="[a, b, c, d, k] for (a + bω + cω² + dω³)/√2^k")


class ExpansionReport(BaseModel):
    input: str
    n: int
    residue_dim: Optional[int] = None
    subgroup: bool
    terms: List[PauliTermModel]
    magnitudes: List[str] = Field(default_factory=list, description="Distinct |α_E|² values")


class DecomposeReport(BaseModel):
    input: str
    n: int
    F: List[str]
    residue_dim: int
    transvections: List[str] = Field(..., description="Vectors v with F = T_v1···T_vm")
    paulis: List[str] = Field(..., description="Hermitian Paulis E(v) of the vectors")
    reconstructs: bool


# ============================================================================
# Verification / Families / Survey
# ============================================================================

class CheckResult(BaseModel):
    name: str
    passed: bool
    skipped: bool = False
    detail: str = ""


class VerifySummary(BaseModel):
    suite: str
    n: int
    passed: bool
    checks: List[CheckResult]
    elapsed_ms: float


class FamilyMemberModel(BaseModel):
    label: str
    matrix: List[str] = Field(..., description="Parameter matrix (A or B) rows as bitstrings")
    residue_dim: int
    climbs: Optional[bool] = None
    hat_in_level3: Optional[bool] = None


class EnumerateReport(BaseModel):
    family: str
    n: int
    count: int
    expected: int
    members: List[FamilyMemberModel]
    verified: Optional[bool] = None


class SurveyRow(BaseModel):
    source: str
    residue_dim: int
    hat_level: Optional[int]
    count: int


class SurveyReport(BaseModel):
    n: int
    max_level: int
    examined: int
    obstructed: int
    rows: List[SurveyRow]
    elapsed_ms: float


class RunRecord(BaseModel):
    id: str
    timestamp: str
    command: str
    target: Optional[str] = None
    exit_code: Optional[int] = None
    verdict: Optional[str] = None
    runtime_ms: Optional[float] = None
    error: Optional[str] = None
    metadata: Optional[Dict[str, Any]] = None


def climb_report_schema() -> Dict[str, Any]:
    """Published JSON schema for ClimbReport."""
    return ClimbReport.model_json_schema()
