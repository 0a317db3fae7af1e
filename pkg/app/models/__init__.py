from app.models.api import (
    DecomposeResponse,
    ExtremalRequest,
    ExtremalResponse,
    MatrixDocument,
    QuintRequest,
    RankRequest,
    RankResponse,
    SolveRequest,
    SolveResponse,
    parse_matrix_document,
)
from app.models.domain import (
    ConsistencyReport,
    DimFormulas,
    DimVector,
    ExtremalReport,
    GeneralSolution,
    QuintInput,
    RankEquality,
    Reduction,
    SimDecomposition,
    VerificationReport,
)
from app.models.qmatrix import BlockSpec, QMatrix
from app.models.quaternion import Quaternion, parse_quaternion

__all__ = [
    "BlockSpec",
    "ConsistencyReport",
    "DecomposeResponse",
    "DimFormulas",
    "DimVector",
    "ExtremalReport",
    "ExtremalRequest",
    "ExtremalResponse",
    "GeneralSolution",
    "MatrixDocument",
    "QMatrix",
    "Quaternion",
    "QuintInput",
    "QuintRequest",
    "RankEquality",
    "RankRequest",
    "RankResponse",
    "Reduction",
    "SimDecomposition",
    "SolveRequest",
    "SolveResponse",
    "VerificationReport",
    "parse_matrix_document",
    "parse_quaternion",
]
