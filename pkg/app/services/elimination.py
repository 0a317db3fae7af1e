"""Gaussian elimination over the quaternion division ring.

Row operations act from the left and column operations from the right. Every
elementary step updates the accumulated transform and its inverse together, so
P * P_inv = I holds exactly without a second elimination.
"""

from app.core import get_logger
from app.models.domain import Compression, Reduction
from app.models.qmatrix import QMatrix
from app.models.quaternion import ONE, ZERO, Quaternion, qinv, qmul

logger = get_logger(__name__)

Rows = list[list[Quaternion]]


def _identity_rows(n: int) -> Rows:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def _to_matrix(rows: Rows, ncols: int) -> QMatrix:
    return QMatrix.from_rows(rows, cols=ncols)


def _find_pivot(work: Rows, k: int, m: int, n: int) -> tuple[int, int] | None:
    """First nonzero entry of work[k:, k:] scanning column by column."""
    for j in range(k, n):
        for i in range(k, m):
            if not work[i][j].is_zero():
                return i, j
    return None


def rank(a: QMatrix) -> int:
    """Rank of ``a`` as the dimension of its column right space."""
    m, n = a.shape
    work = a.to_rows()
    r = 0
    for j in range(n):
        pivot = next((i for i in range(r, m) if not work[i][j].is_zero()), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = qinv(work[r][j])
        work[r] = [qmul(inv, x) for x in work[r]]
        for i in range(r + 1, m):
            c = work[i][j]
            if c.is_zero():
                continue
            work[i] = [x - qmul(c, y) for x, y in zip(work[i], work[r])]
        r += 1
        if r == m:
            break
    return r


def canonical_reduce(a: QMatrix) -> Reduction:
    """Find nonsingular P, Q with P * A * Q = diag(I_r, 0)."""
    m, n = a.shape
    work = a.to_rows()
    p, p_inv = _identity_rows(m), _identity_rows(m)
    q, q_inv = _identity_rows(n), _identity_rows(n)

    k = 0
    while k < min(m, n):
        found = _find_pivot(work, k, m, n)
        if found is None:
            break
        i, j = found

        if i != k:
            work[i], work[k] = work[k], work[i]
            p[i], p[k] = p[k], p[i]
            for row in p_inv:
                row[i], row[k] = row[k], row[i]
        if j != k:
            for row in work:
                row[j], row[k] = row[k], row[j]
            for row in q:
                row[j], row[k] = row[k], row[j]
            q_inv[j], q_inv[k] = q_inv[k], q_inv[j]

        pivot = work[k][k]
        inv = qinv(pivot)
        work[k] = [qmul(inv, x) for x in work[k]]
        p[k] = [qmul(inv, x) for x in p[k]]
        for row in p_inv:
            row[k] = qmul(row[k], pivot)

        # clear column k below the pivot: row_i -= c * row_k
        for i in range(k + 1, m):
            c = work[i][k]
            if c.is_zero():
                continue
            work[i] = [x - qmul(c, y) for x, y in zip(work[i], work[k])]
            p[i] = [x - qmul(c, y) for x, y in zip(p[i], p[k])]
            for row in p_inv:
                row[k] = row[k] + qmul(row[i], c)

        # clear row k right of the pivot: col_j -= col_k * d
        for j in range(k + 1, n):
            d = work[k][j]
            if d.is_zero():
                continue
            for row in work:
                row[j] = row[j] - qmul(row[k], d)
            for row in q:
                row[j] = row[j] - qmul(row[k], d)
            q_inv[k] = [x + qmul(d, y) for x, y in zip(q_inv[k], q_inv[j])]

        k += 1

    logger.debug(f"canonical_reduce {m}x{n} -> rank {k}")
    return Reduction(
        P=_to_matrix(p, m),
        P_inv=_to_matrix(p_inv, m),
        rank=k,
        Q=_to_matrix(q, n),
        Q_inv=_to_matrix(q_inv, n),
    )


def compress_rows(a: QMatrix) -> Compression:
    """T * A = [A1; 0] with A1 of full row rank."""
    red = canonical_reduce(a)
    return Compression(T=red.P, T_inv=red.P_inv, rank=red.rank, side="row")


def compress_cols(a: QMatrix) -> Compression:
    """A * T = [A1, 0] with A1 of full column rank."""
    red = canonical_reduce(a)
    return Compression(T=red.Q, T_inv=red.Q_inv, rank=red.rank, side="col")


def diag_identity(rows: int, cols: int, r: int) -> QMatrix:
    """diag(I_r, 0) of the given shape."""
    return QMatrix(
        rows, cols, [ONE if i == j and i < r else ZERO for i in range(rows) for j in range(cols)]
    )


def inner_inverse(a: QMatrix) -> QMatrix:
    """Some G with A * G * A = A, namely Q * diag(I_r, 0) * P."""
    red = canonical_reduce(a)
    return red.Q @ diag_identity(a.cols, a.rows, red.rank) @ red.P
