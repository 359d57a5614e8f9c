# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""FastAPI surface over analyze, expand and enumerate.

Run with: python api/api.py
"""
import sys
import time
from pathlib import Path
from typing import Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from algebra.errors import ClimbError, NotHermitian
from circuit import CircuitError, evaluate, parse_circuit
from config.settings import settings
from data.models import (
    ClimbReport,
    EnumerateReport,
    ExpansionReport,
    FamilyMemberModel,
    PauliTermModel,
)
from engine.clifford_engine import FAMILIES, enumerate_climber_family, pauli_expand
from engine.hierarchy_analyzer import climb_verdict
from utils.budget import BudgetExceeded, ensure_within_limits
from utils.run_ledger import log_run


# FastAPI app
app = FastAPI(
    title="Clifford Climb API",
    description="Exact Clifford-hierarchy analysis of gate square roots",
    version="1.0.0"
)

# CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Request models
class AnalyzeRequest(BaseModel):
    circuit: str = Field(..., description="Circuit text, starting with 'qubits N'")
    hat: bool = False
    minus: bool = False
    max_level: Optional[int] = Field(default=None, ge=1)


class ExpandRequest(BaseModel):
    circuit: str


def _run(endpoint: str, target: Optional[str], work):
    """Call ``work`` with error mapping and ledger logging."""
    start = time.time()
    try:
        result = work()
    except (CircuitError, ClimbError) as e:
        log_run(command=endpoint, target=target, exit_code=1, error=str(e))
        raise HTTPException(status_code=400, detail=str(e))
    except BudgetExceeded as e:
        log_run(command=endpoint, target=target, exit_code=2, error=str(e))
        raise HTTPException(status_code=429, detail=str(e))
    except Exception as e:
        log_run(command=endpoint, target=target, exit_code=1, error=str(e))
        raise HTTPException(status_code=500, detail=str(e))
    log_run(
        command=endpoint,
        target=target,
        exit_code=0,
        verdict=getattr(getattr(result, "verdict", None), "value", None),
        runtime_ms=(time.time() - start) * 1000,
    )
    return result


# =============================================================================
# ROUTES
# =============================================================================

@app.get("/health")
async def health():
    """Health check endpoint."""
    return {
        "status": "healthy",
        "version": "1.0.0",
        "max_qubits": settings.max_qubits,
        "max_level": settings.max_level,
    }


@app.post("/api/analyze", response_model=ClimbReport)
def analyze(request: AnalyzeRequest):
    """Climb verdict for a circuit, optionally with the root's level."""
    def work():
        u = evaluate(parse_circuit(request.circuit))
        if request.hat and not u.is_hermitian():
            raise NotHermitian("hat analysis needs a Hermitian circuit")
        max_level = request.max_level or settings.max_level
        return climb_verdict(
            u,
            description="api",
            max_level=max_level,
            hat_bound=max_level if request.hat else None,
            sign=-1 if request.minus else 1,
        )
    return _run("api/analyze", None, work)


@app.post("/api/expand", response_model=ExpansionReport)
def expand(request: ExpandRequest):
    """Exact Pauli expansion of a circuit."""
    def work():
        expansion = pauli_expand(evaluate(parse_circuit(request.circuit)))
        return ExpansionReport(
            input="api",
            n=expansion.n,
            residue_dim=expansion.r,
            subgroup=expansion.subgroup,
            terms=[
                PauliTermModel(pauli=e.label(), coeff=str(alpha), exact=alpha.to_json())
                for e, alpha in expansion.terms
            ],
            magnitudes=[str(m) for m in expansion.magnitudes()],
        )
    return _run("api/expand", None, work)


@app.get("/api/enumerate", response_model=EnumerateReport)
def enumerate_family(
    family: str = Query(..., description="diagonal or permutation"),
    n: int = Query(..., ge=1),
):
    """List the climbing diagonal or permutation Cliffords on n qubits."""
    if family not in FAMILIES:
        raise HTTPException(status_code=400, detail=f"family must be one of {list(FAMILIES)}")

    def work():
        ensure_within_limits(n)
        stream, expected = enumerate_climber_family(family, n)
        members = [
            FamilyMemberModel(label=m.label, matrix=m.matrix_rows(), residue_dim=m.residue_dim)
            for m in stream
        ]
        return EnumerateReport(family=family, n=n, count=len(members), expected=expected, members=members)
    return _run("api/enumerate", family, work)


if __name__ == "__main__":
    import uvicorn
    print("=" * 60)
    print("  Clifford Climb API")
    print("=" * 60)
    print(f"  Listening on http://{settings.api_host}:{settings.api_port}")
    print("=" * 60)
    uvicorn.run(app, host=settings.api_host, port=settings.api_port)
