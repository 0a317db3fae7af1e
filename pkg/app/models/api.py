from typing import Literal

from pydantic import BaseModel, Field, ValidationError, model_validator

from app.core import ParseError
from app.models.domain import QuintInput
from app.models.qmatrix import QMatrix
from app.models.quaternion import format_quaternion, parse_quaternion


class MatrixDocument(BaseModel):
    """Quaternion matrix as JSON: entries are rows of quaternion literals."""

    rows: int = Field(..., ge=0, description="Number of rows")
    cols: int = Field(..., ge=0, description="Number of columns")
    entries: list[list[str]] = Field(
        default_factory=list, description="Row-major quaternion literals such as '1/2+3*i-k'"
    )

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixDocument":
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows of entries, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.cols}")
        return self

    def to_qmatrix(self) -> QMatrix:
        values = []
        for i, row in enumerate(self.entries):
            for j, literal in enumerate(row):
                try:
                    values.append(parse_quaternion(literal))
                except ParseError as e:
                    raise ParseError(f"entry ({i},{j}): {e}") from e
        return QMatrix(self.rows, self.cols, values)

    @classmethod
    def from_qmatrix(cls, x: QMatrix) -> "MatrixDocument":
        return cls(
            rows=x.rows,
            cols=x.cols,
            entries=[[format_quaternion(e) for e in row] for row in x.to_rows()],
        )


def parse_matrix_document(text: str | bytes) -> QMatrix:
    """Parse a JSON matrix document.

    Raises:
        ParseError: If the JSON or any quaternion literal is malformed
    """
    try:
        doc = MatrixDocument.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first.get("loc", ()))
        raise ParseError(f"Invalid matrix document at '{where}': {first.get('msg')}") from e
    return doc.to_qmatrix()


class RankRequest(BaseModel):
    matrix: MatrixDocument = Field(..., description="Matrix whose rank is computed")


class RankResponse(BaseModel):
    rank: int = Field(..., description="Rank by quaternion elimination")
    oracle_rank: int = Field(..., description="Rank through the real 4x4 embedding")


class QuintRequest(BaseModel):
    A: MatrixDocument
    B: MatrixDocument
    C: MatrixDocument
    D: MatrixDocument
    E: MatrixDocument

    def to_input(self) -> QuintInput:
        return QuintInput(
            A=self.A.to_qmatrix(),
            B=self.B.to_qmatrix(),
            C=self.C.to_qmatrix(),
            D=self.D.to_qmatrix(),
            E=self.E.to_qmatrix(),
        )


class CheckDocument(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerificationDocument(BaseModel):
    passed: bool
    checks: list[CheckDocument]


class DecomposeResponse(BaseModel):
    dims: dict[str, int] = Field(..., description="Block sizes m1..m7, n2..n7 and widths")
    transforms: dict[str, MatrixDocument] = Field(..., description="P, Q, T1, T2, V1, V2")
    factors: dict[str, MatrixDocument] = Field(..., description="S_A .. S_E")
    core: dict[str, MatrixDocument] = Field(..., description="Free core blocks")
    rank_A3: int
    rank_A7: int
    verification: VerificationDocument


class ExtremalRequest(BaseModel):
    coefficients: dict[str, MatrixDocument] = Field(
        ..., description="Named coefficient matrices, e.g. A, B, C, D, E for p"
    )


class ExtremalResponse(BaseModel):
    kind: str
    max_rank: int
    min_rank: int
    max_term: str = ""
    verified: bool = True
    max_witness: dict[str, MatrixDocument]
    min_witness: dict[str, MatrixDocument]


class SolveRequest(QuintRequest):
    mode: Literal["particular", "min-rank-x", "min-rank-y"] = Field(
        default="particular", description="Which solution to return"
    )


class RankEqualityDocument(BaseModel):
    name: str
    lhs: int
    rhs: int
    holds: bool


class SolveResponse(BaseModel):
    consistent: bool
    equalities: list[RankEqualityDocument]
    mode: str
    X: MatrixDocument | None = None
    Y: MatrixDocument | None = None
    rank_X: int | None = None
    rank_Y: int | None = None
    min_rank_X: int | None = None
    min_rank_Y: int | None = None
    substitution_exact: bool | None = None
    failing: str | None = Field(default=None, description="First rank equality that fails, if any")
