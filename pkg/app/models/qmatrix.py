"""Dense quaternion matrices with block calculus and the real embedding."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

from app.core import DimensionMismatch
from app.models.quaternion import ONE, ZERO, Quaternion, ScalarLike, qconj, qmul


class QMatrix:
    """Immutable m x n matrix of quaternions stored row-major.

    Zero-sized matrices are allowed in either dimension and behave as empty
    blocks everywhere.
    """

    __slots__ = ("rows", "cols", "entries")

    rows: int
    cols: int
    entries: tuple[Quaternion, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[ScalarLike] = ()):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"Negative matrix shape {rows}x{cols}")
        data = tuple(Quaternion.coerce(e) for e in entries)
        if len(data) != rows * cols:
            raise DimensionMismatch(
                f"Expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QMatrix is immutable")

    # construction ---------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], cols: int | None = None) -> QMatrix:
        """Build from nested rows. ``cols`` is only needed when ``rows`` is empty."""
        if not rows:
            return cls.zeros(0, cols or 0)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("Ragged rows in matrix literal")
        if cols is not None and cols != width:
            raise DimensionMismatch(f"Declared {cols} columns but rows have {width}")
        return cls(len(rows), width, [e for r in rows for e in r])

    @classmethod
    def diag(cls, *blocks: QMatrix) -> QMatrix:
        """Block-diagonal matrix."""
        grid = [[b if i == j else None for j, b in enumerate(blocks)] for i in range(len(blocks))]
        spec = BlockSpec([b.rows for b in blocks], [b.cols for b in blocks])
        return assemble(spec, grid)

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> Quaternion:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Index {index} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Quaternion]]:
        return [list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)]

    def row(self, i: int) -> list[Quaternion]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> QMatrix:
        """Rows r0..r1-1 and columns c0..c1-1."""
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise DimensionMismatch(
                f"Slice [{r0}:{r1}, {c0}:{c1}] out of range for {self.rows}x{self.cols}"
            )
        return QMatrix(
            r1 - r0,
            c1 - c0,
            [self.entries[i * self.cols + j] for i in range(r0, r1) for j in range(c0, c1)],
        )

    def replace(self, i: int, j: int, value: ScalarLike) -> QMatrix:
        data = list(self.entries)
        data[i * self.cols + j] = Quaternion.coerce(value)
        return QMatrix(self.rows, self.cols, data)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == QMatrix.identity(self.rows)

    # arithmetic -----------------------------------------------------------

    def _check_same_shape(self, other: QMatrix, op: str) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"Cannot {op} {self.rows}x{self.cols} and {other.rows}x{other.cols}")

    def __add__(self, other: QMatrix) -> QMatrix:
        self._check_same_shape(other, "add")
        return QMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: QMatrix) -> QMatrix:
        self._check_same_shape(other, "subtract")
        return QMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> QMatrix:
        return QMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __matmul__(self, other: QMatrix) -> QMatrix:
        return matmul(self, other)

    def lscale(self, q: ScalarLike) -> QMatrix:
        """q * M, scalar on the left."""
        s = Quaternion.coerce(q)
        return QMatrix(self.rows, self.cols, [qmul(s, a) for a in self.entries])

    def rscale(self, q: ScalarLike) -> QMatrix:
        """M * q, scalar on the right."""
        s = Quaternion.coerce(q)
        return QMatrix(self.rows, self.cols, [qmul(a, s) for a in self.entries])

    @property
    def H(self) -> QMatrix:  # noqa: N802
        return ctranspose(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in r) for r in self.to_rows())
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"


def matmul(x: QMatrix, y: QMatrix) -> QMatrix:
    """Matrix product with factor order preserved in every scalar product.

    Raises:
        DimensionMismatch: If x.cols != y.rows
    """
    if x.cols != y.rows:
        raise DimensionMismatch(f"Cannot multiply {x.rows}x{x.cols} by {y.rows}x{y.cols}")
    m, k, n = x.rows, x.cols, y.cols
    xe, ye = x.entries, y.entries
    out: list[Quaternion] = []
    for i in range(m):
        xrow = xe[i * k : (i + 1) * k]
        for j in range(n):
            acc = ZERO
            for t, a in enumerate(xrow):
                if a.is_zero():
                    continue
                b = ye[t * n + j]
                if not b.is_zero():
                    acc = acc + qmul(a, b)
            out.append(acc)
    return QMatrix(m, n, out)


def mul_all(*factors: QMatrix) -> QMatrix:
    """Left-to-right product of two or more matrices."""
    result = factors[0]
    for f in factors[1:]:
        result = matmul(result, f)
    return result


def ctranspose(x: QMatrix) -> QMatrix:
    return QMatrix(
        x.cols,
        x.rows,
        [qconj(x.entries[i * x.cols + j]) for j in range(x.cols) for i in range(x.rows)],
    )


@dataclass(frozen=True)
class BlockSpec:
    """Partition of a matrix into block rows and block columns."""

    row_heights: tuple[int, ...]
    col_widths: tuple[int, ...]

    def __init__(self, row_heights: Sequence[int], col_widths: Sequence[int]):
        if any(h < 0 for h in row_heights) or any(w < 0 for w in col_widths):
            raise DimensionMismatch("Block sizes must be non-negative")
        object.__setattr__(self, "row_heights", tuple(row_heights))
        object.__setattr__(self, "col_widths", tuple(col_widths))

    @property
    def rows(self) -> int:
        return sum(self.row_heights)

    @property
    def cols(self) -> int:
        return sum(self.col_widths)

    def row_offsets(self) -> list[int]:
        return [0, *accumulate(self.row_heights)]

    def col_offsets(self) -> list[int]:
        return [0, *accumulate(self.col_widths)]


def assemble(spec: BlockSpec, blocks: Sequence[Sequence[QMatrix | None]]) -> QMatrix:
    """Assemble a block matrix. ``None`` stands for a zero block of the spec's size.

    Raises:
        DimensionMismatch: If the grid shape or any block disagrees with ``spec``
    """
    if len(blocks) != len(spec.row_heights) or any(
        len(r) != len(spec.col_widths) for r in blocks
    ):
        raise DimensionMismatch("Block grid shape does not match block spec")
    ncols = spec.cols
    data: list[Quaternion] = []
    for bi, height in enumerate(spec.row_heights):
        for bj, width in enumerate(spec.col_widths):
            block = blocks[bi][bj]
            if block is not None and block.shape != (height, width):
                raise DimensionMismatch(
                    f"Block ({bi},{bj}) is {block.rows}x{block.cols}, expected {height}x{width}"
                )
        for r in range(height):
            for bj, width in enumerate(spec.col_widths):
                block = blocks[bi][bj]
                if block is None:
                    data.extend([ZERO] * width)
                else:
                    data.extend(block.entries[r * width : (r + 1) * width])
    return QMatrix(spec.rows, ncols, data)


def extract(spec: BlockSpec, x: QMatrix, i: int, j: int) -> QMatrix:
    if x.shape != (spec.rows, spec.cols):
        raise DimensionMismatch(
            f"Matrix is {x.rows}x{x.cols} but spec partitions {spec.rows}x{spec.cols}"
        )
    ro, co = spec.row_offsets(), spec.col_offsets()
    return x.submatrix(ro[i], ro[i + 1], co[j], co[j + 1])


def split(spec: BlockSpec, x: QMatrix) -> list[list[QMatrix]]:
    """Every block of ``x`` under ``spec``."""
    return [
        [extract(spec, x, i, j) for j in range(len(spec.col_widths))]
        for i in range(len(spec.row_heights))
    ]


def bmat(blocks: Sequence[Sequence[QMatrix | None]]) -> QMatrix:
    """Assemble a block matrix, inferring block sizes from the non-``None`` blocks.

    Every block row and block column needs at least one concrete block.
    """
    heights: list[int] = []
    for bi, row in enumerate(blocks):
        sizes = {b.rows for b in row if b is not None}
        if len(sizes) != 1:
            raise DimensionMismatch(f"Cannot infer height of block row {bi}")
        heights.append(sizes.pop())
    widths: list[int] = []
    for bj in range(len(blocks[0]) if blocks else 0):
        sizes = {row[bj].cols for row in blocks if row[bj] is not None}  # type: ignore[union-attr]
        if len(sizes) != 1:
            raise DimensionMismatch(f"Cannot infer width of block column {bj}")
        widths.append(sizes.pop())
    return assemble(BlockSpec(heights, widths), blocks)


def hstack(*parts: QMatrix) -> QMatrix:
    return bmat([list(parts)])


def vstack(*parts: QMatrix) -> QMatrix:
    return bmat([[p] for p in parts])


def left_matrix(q: Quaternion) -> list[list[Fraction]]:
    """4x4 real matrix of v -> q*v on the basis (1, i, j, k)."""
    a0, a1, a2, a3 = q.components
    return [
        [a0, -a1, -a2, -a3],
        [a1, a0, -a3, a2],
        [a2, a3, a0, -a1],
        [a3, -a2, a1, a0],
    ]


def real_embedding(x: QMatrix) -> list[list[Fraction]]:
    """Replace each entry by its 4x4 left-multiplication matrix."""
    out = [[Fraction(0)] * (4 * x.cols) for _ in range(4 * x.rows)]
    for i in range(x.rows):
        for j in range(x.cols):
            q = x[i, j]
            if q.is_zero():
                continue
            block = left_matrix(q)
            for r in range(4):
                out[4 * i + r][4 * j : 4 * j + 4] = block[r]
    return out
