from dataclasses import dataclass, field, fields
from typing import Literal, Mapping

from app.core import DimensionMismatch
from app.models.qmatrix import BlockSpec, QMatrix, assemble, mul_all


@dataclass(frozen=True)
class Reduction:
    """P * A * Q = diag(I_r, 0), with both inverses kept alongside."""

    P: QMatrix
    P_inv: QMatrix
    rank: int
    Q: QMatrix
    Q_inv: QMatrix


@dataclass(frozen=True)
class Compression:
    """Row side: T * A = [A1; 0]. Column side: A * T = [A1, 0]. A1 has full rank ``rank``."""

    T: QMatrix
    T_inv: QMatrix
    rank: int
    side: Literal["row", "col"]


@dataclass(frozen=True)
class QuintInput:
    """The five coefficient matrices of A - BXD - CYE."""

    A: QMatrix
    B: QMatrix
    C: QMatrix
    D: QMatrix
    E: QMatrix

    def __post_init__(self) -> None:
        if not (self.A.rows == self.B.rows == self.C.rows):
            raise DimensionMismatch(
                f"A, B, C must share a row count, got {self.A.rows}, {self.B.rows}, {self.C.rows}"
            )
        if not (self.A.cols == self.D.cols == self.E.cols):
            raise DimensionMismatch(
                f"A, D, E must share a column count, got {self.A.cols}, {self.D.cols}, {self.E.cols}"
            )

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    @property
    def p1(self) -> int:
        return self.B.cols

    @property
    def p2(self) -> int:
        return self.C.cols

    @property
    def q1(self) -> int:
        return self.D.rows

    @property
    def q2(self) -> int:
        return self.E.rows


@dataclass(frozen=True)
class DimVector:
    """Block sizes of the simultaneous decomposition."""

    m1: int
    m2: int
    m3: int
    m4: int
    m5: int
    m6: int
    m7: int
    n2: int
    n3: int
    n4: int
    n7: int
    p1: int
    p2: int
    q1: int
    q2: int

    @property
    def wB1(self) -> int:  # noqa: N802
        return self.p1 - self.m2 - self.m3

    @property
    def wC1(self) -> int:  # noqa: N802
        return self.p2 - self.m3 - self.m4

    @property
    def hD1(self) -> int:  # noqa: N802
        return self.q1 - self.n2 - self.n3

    @property
    def hE1(self) -> int:  # noqa: N802
        return self.q2 - self.n3 - self.n4

    def is_nonnegative(self) -> bool:
        values = [getattr(self, f.name) for f in fields(self)]
        values += [self.wB1, self.wC1, self.hD1, self.hE1]
        return all(v >= 0 for v in values)

    # block partitions of the five structured factors

    def row_spec(self) -> tuple[int, ...]:
        return (self.m1, self.m2, self.m3, self.m4, self.m5, self.m6, self.m7)

    def col_spec(self) -> tuple[int, ...]:
        return (self.m6, self.n2, self.n3, self.n4, self.m5, self.m1, self.n7)

    def spec_a(self) -> BlockSpec:
        return BlockSpec(self.row_spec(), self.col_spec())

    def spec_b(self) -> BlockSpec:
        return BlockSpec(self.row_spec(), (self.m2, self.m3, self.wB1))

    def spec_c(self) -> BlockSpec:
        return BlockSpec(self.row_spec(), (self.wC1, self.m3, self.m4))

    def spec_d(self) -> BlockSpec:
        return BlockSpec((self.n2, self.n3, self.hD1), self.col_spec())

    def spec_e(self) -> BlockSpec:
        return BlockSpec((self.hE1, self.n3, self.n4), self.col_spec())

    def spec_x(self) -> BlockSpec:
        """Partition of T1 * X * V1."""
        return BlockSpec((self.m2, self.m3, self.wB1), (self.n2, self.n3, self.hD1))

    def spec_y(self) -> BlockSpec:
        """Partition of T2 * Y * V2."""
        return BlockSpec((self.wC1, self.m3, self.m4), (self.hE1, self.n3, self.n4))

    def spec_core(self) -> BlockSpec:
        return BlockSpec((self.m2, self.m3, self.m4), (self.n2, self.n3, self.n4))

    def as_dict(self) -> dict[str, int]:
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out.update(wB1=self.wB1, wC1=self.wC1, hD1=self.hD1, hE1=self.hE1)
        return out


CORE_BLOCKS = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "B1", "C1", "C2", "D1", "E1", "E2")


@dataclass(frozen=True)
class SimDecomposition:
    """A = P S_A Q, B = P S_B T1, C = P S_C T2, D = V1 S_D Q, E = V2 S_E Q."""

    P: QMatrix
    P_inv: QMatrix
    Q: QMatrix
    Q_inv: QMatrix
    T1: QMatrix
    T1_inv: QMatrix
    T2: QMatrix
    T2_inv: QMatrix
    V1: QMatrix
    V1_inv: QMatrix
    V2: QMatrix
    V2_inv: QMatrix
    S_A: QMatrix
    S_B: QMatrix
    S_C: QMatrix
    S_D: QMatrix
    S_E: QMatrix
    dims: DimVector
    core: dict[str, QMatrix] = field(default_factory=dict)
    rank_a3: int = 0
    rank_a7: int = 0

    def transforms(self) -> dict[str, tuple[QMatrix, QMatrix]]:
        return {
            "P": (self.P, self.P_inv),
            "Q": (self.Q, self.Q_inv),
            "T1": (self.T1, self.T1_inv),
            "T2": (self.T2, self.T2_inv),
            "V1": (self.V1, self.V1_inv),
            "V2": (self.V2, self.V2_inv),
        }

    def factors(self) -> dict[str, QMatrix]:
        return {"S_A": self.S_A, "S_B": self.S_B, "S_C": self.S_C, "S_D": self.S_D, "S_E": self.S_E}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True)
class ExtremalReport:
    """Closed-form extremal ranks plus variable assignments attaining them.

    Witness keys name the variables of the expression (``X``/``Y`` or ``X1``..``X4``).
    """

    kind: str
    max_rank: int
    min_rank: int
    max_witness: dict[str, QMatrix]
    min_witness: dict[str, QMatrix]
    max_term: str = ""
    verified: bool = True


@dataclass(frozen=True)
class RankEquality:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class ConsistencyReport:
    equalities: list[RankEquality]

    @property
    def consistent(self) -> bool:
        return all(eq.holds for eq in self.equalities)

    @property
    def failing(self) -> RankEquality | None:
        return next((eq for eq in self.equalities if not eq.holds), None)


X_FREE = ("X3", "X5", "X6", "X7", "X8", "X9")
Y_FREE = ("Y1", "Y2", "Y3", "Y4", "Y7")


@dataclass(frozen=True)
class GeneralSolution:
    """Every solution of B X D + C Y E = A, parametrised by free blocks.

    In the transformed coordinates X^ = T1 X V1 and Y^ = T2 Y V2 the blocks are

        X^ = [[A1, A2, X3], [A4, X5, X6], [X7, X8, X9]]
        Y^ = [[Y1, Y2, Y3], [Y4, A5 - X5, A6], [Y7, A8, A9]]

    and any choice of the free blocks gives a solution.
    """

    decomposition: SimDecomposition

    def free_shapes(self) -> dict[str, tuple[int, int]]:
        d = self.decomposition.dims
        return {
            "X3": (d.m2, d.hD1),
            "X5": (d.m3, d.n3),
            "X6": (d.m3, d.hD1),
            "X7": (d.wB1, d.n2),
            "X8": (d.wB1, d.n3),
            "X9": (d.wB1, d.hD1),
            "Y1": (d.wC1, d.hE1),
            "Y2": (d.wC1, d.n3),
            "Y3": (d.wC1, d.n4),
            "Y4": (d.m3, d.hE1),
            "Y7": (d.m4, d.hE1),
        }

    def _block(self, free: Mapping[str, QMatrix], name: str) -> QMatrix:
        rows, cols = self.free_shapes()[name]
        block = free.get(name)
        if block is None:
            return QMatrix.zeros(rows, cols)
        if block.shape != (rows, cols):
            raise DimensionMismatch(
                f"Free block {name} must be {rows}x{cols}, got {block.rows}x{block.cols}"
            )
        return block

    def transformed(self, free: Mapping[str, QMatrix]) -> tuple[QMatrix, QMatrix]:
        """X^ and Y^ for the given free blocks (missing blocks are zero)."""
        unknown = set(free) - set(X_FREE) - set(Y_FREE)
        if unknown:
            raise DimensionMismatch(f"Unknown free blocks: {sorted(unknown)}")
        dec = self.decomposition
        core = dec.core
        b = {name: self._block(free, name) for name in (*X_FREE, *Y_FREE)}
        x_hat = assemble(
            dec.dims.spec_x(),
            [
                [core["A1"], core["A2"], b["X3"]],
                [core["A4"], b["X5"], b["X6"]],
                [b["X7"], b["X8"], b["X9"]],
            ],
        )
        y_hat = assemble(
            dec.dims.spec_y(),
            [
                [b["Y1"], b["Y2"], b["Y3"]],
                [b["Y4"], core["A5"] - b["X5"], core["A6"]],
                [b["Y7"], core["A8"], core["A9"]],
            ],
        )
        return x_hat, y_hat

    def member(self, free: Mapping[str, QMatrix]) -> tuple[QMatrix, QMatrix]:
        x_hat, y_hat = self.transformed(free)
        dec = self.decomposition
        x = mul_all(dec.T1_inv, x_hat, dec.V1_inv)
        y = mul_all(dec.T2_inv, y_hat, dec.V2_inv)
        return x, y

    def particular(self) -> tuple[QMatrix, QMatrix]:
        return self.member({})


@dataclass(frozen=True)
class DimFormulas:
    """Block sizes evaluated from ranks of bordered matrices of the input.

    Only the sum m1 + m5 + m6 is determined by ranks alone.
    """

    m156: int
    m2: int
    m3: int
    m4: int
    n2: int
    n3: int
    n4: int

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}
