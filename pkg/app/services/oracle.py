"""Brute-force checks through the real 4x4 embedding.

Nothing here touches the quaternion elimination routines: ranks and
solvability are recomputed with sympy's exact linear algebra over QQ on the
real images of the quaternion data.

Real unknowns of B X D + C Y E = A are ordered by component (1, i, j, k)
within each entry, entries row-major, X before Y. Equations follow the same
order over the entries of A.
"""

from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from app.core import InternalInconsistency, get_logger
from app.models.domain import QuintInput
from app.models.qmatrix import QMatrix, real_embedding
from app.models.quaternion import I, J, K, ONE, Quaternion, qmul

logger = get_logger(__name__)

UNITS = (ONE, I, J, K)


def _domain_matrix(rows: list[list[Fraction]], ncols: int) -> DomainMatrix:
    data = [[QQ(v.numerator, v.denominator) for v in row] for row in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def _real_rank(rows: list[list[Fraction]], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return int(_domain_matrix(rows, ncols).rank())


def oracle_rank(a: QMatrix) -> int:
    """Quaternion rank as a quarter of the real rank of the embedding."""
    real = _real_rank(real_embedding(a), 4 * a.cols)
    if real % 4:
        raise InternalInconsistency(f"Real rank {real} of an embedded matrix is not divisible by 4")
    return real // 4


@dataclass(frozen=True)
class RealSystem:
    """M u = b over the rationals, one column per real unknown."""

    matrix: list[list[Fraction]]
    rhs: list[Fraction]
    unknowns: int


def _coordinates(x: QMatrix) -> list[Fraction]:
    return [c for q in x.entries for c in q.components]


def _sandwich(left: QMatrix, s: int, unit: Quaternion, right: QMatrix, t: int) -> list[Fraction]:
    """Real coordinates of left[:, s] * unit * right[t, :]."""
    out: list[Fraction] = []
    for i in range(left.rows):
        lu = qmul(left[i, s], unit)
        for j in range(right.cols):
            out.extend(qmul(lu, right[t, j]).components)
    return out


def real_system(q: QuintInput) -> RealSystem:
    columns: list[list[Fraction]] = []
    for left, right in ((q.B, q.D), (q.C, q.E)):
        for s in range(left.cols):
            for t in range(right.rows):
                for unit in UNITS:
                    columns.append(_sandwich(left, s, unit, right, t))
    equations = 4 * q.m * q.n
    matrix = [[col[r] for col in columns] for r in range(equations)]
    return RealSystem(matrix=matrix, rhs=_coordinates(q.A), unknowns=len(columns))


def _solve_real(system: RealSystem) -> list[Fraction] | None:
    n = system.unknowns
    if not system.rhs:
        return [Fraction(0)] * n
    if n == 0:
        return [] if all(v == 0 for v in system.rhs) else None
    augmented = [row + [b] for row, b in zip(system.matrix, system.rhs)]
    reduced, pivots = _domain_matrix(augmented, n + 1).rref()
    if n in pivots:
        return None
    rows = reduced.to_Matrix()
    solution = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        value = rows[r, n]
        solution[c] = Fraction(int(value.p), int(value.q))
    return solution


def oracle_solvable(q: QuintInput) -> bool:
    solvable = _solve_real(real_system(q)) is not None
    logger.debug("oracle_solvable", extra={"extra": {"solvable": solvable}})
    return solvable


def _assemble(values: list[Fraction], rows: int, cols: int) -> QMatrix:
    entries = [Quaternion(*values[4 * e : 4 * e + 4]) for e in range(rows * cols)]
    return QMatrix(rows, cols, entries)


def oracle_solve(q: QuintInput) -> tuple[QMatrix, QMatrix] | None:
    """One exact solution (X, Y), or None when the equation is unsolvable."""
    values = _solve_real(real_system(q))
    if values is None:
        return None
    split_at = 4 * q.p1 * q.q1
    x = _assemble(values[:split_at], q.p1, q.q1)
    y = _assemble(values[split_at:], q.p2, q.q2)
    return x, y
