from fastapi import APIRouter

from app.core import VerificationFailed, get_logger
from app.models import (
    DecomposeResponse,
    ExtremalRequest,
    ExtremalResponse,
    MatrixDocument,
    QuintRequest,
    RankRequest,
    RankResponse,
    SolveRequest,
    SolveResponse,
)
from app.models.api import RankEqualityDocument
from app.services.elimination import rank
from app.services.equation import (
    general_solution,
    is_consistent,
    min_rank_solution_values,
    min_rank_solution_witness,
    substitution_exact,
)
from app.services.extremal import extremal_report
from app.services.oracle import oracle_rank
from app.services.simdecomp import decomposition_document, simultaneous_decompose, verify_decomposition

logger = get_logger(__name__)

router = APIRouter()


@router.get("/health")
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy"}


@router.post("/rank", response_model=RankResponse)
async def compute_rank(request: RankRequest):
    """Rank by elimination alongside the real-embedding rank."""
    a = request.matrix.to_qmatrix()
    return RankResponse(rank=rank(a), oracle_rank=oracle_rank(a))


@router.post("/decompose", response_model=DecomposeResponse)
async def decompose(request: QuintRequest):
    """Simultaneous decomposition with its verification report."""
    q = request.to_input()
    dec = simultaneous_decompose(q)
    report = verify_decomposition(q, dec)
    if not report.passed:
        raise VerificationFailed(
            f"Decomposition failed verification: {[c.name for c in report.failures()]}"
        )
    return decomposition_document(dec, report)


@router.post("/extremal/{kind}", response_model=ExtremalResponse)
async def extremal(kind: str, request: ExtremalRequest):
    """Extremal ranks of p, f1, f2 or f3 with witnesses."""
    coeffs = {name: doc.to_qmatrix() for name, doc in request.coefficients.items()}
    report = extremal_report(kind, coeffs)
    return ExtremalResponse(
        kind=report.kind,
        max_rank=report.max_rank,
        min_rank=report.min_rank,
        max_term=report.max_term,
        verified=report.verified,
        max_witness={k: MatrixDocument.from_qmatrix(v) for k, v in report.max_witness.items()},
        min_witness={k: MatrixDocument.from_qmatrix(v) for k, v in report.min_witness.items()},
    )


@router.post("/solve", response_model=SolveResponse)
async def solve(request: SolveRequest):
    """Consistency report and, when solvable, one solution of B X D + C Y E = A."""
    q = request.to_input()
    consistency = is_consistent(q)
    equalities = [
        RankEqualityDocument(name=eq.name, lhs=eq.lhs, rhs=eq.rhs, holds=eq.holds)
        for eq in consistency.equalities
    ]
    if not consistency.consistent:
        failing = consistency.failing
        return SolveResponse(
            consistent=False,
            equalities=equalities,
            mode=request.mode,
            failing=failing.name if failing else None,
        )

    if request.mode == "particular":
        x, y = general_solution(q).particular()
    else:
        x, y = min_rank_solution_witness(q, "X" if request.mode == "min-rank-x" else "Y")
    min_x, min_y = min_rank_solution_values(q)
    logger.info("Solved equation", extra={"extra": {"mode": request.mode}})
    return SolveResponse(
        consistent=True,
        equalities=equalities,
        mode=request.mode,
        X=MatrixDocument.from_qmatrix(x),
        Y=MatrixDocument.from_qmatrix(y),
        rank_X=rank(x),
        rank_Y=rank(y),
        min_rank_X=min_x,
        min_rank_Y=min_y,
        substitution_exact=substitution_exact(q, x, y),
    )
