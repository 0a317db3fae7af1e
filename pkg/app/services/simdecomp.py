"""Simultaneous decomposition of the matrix quintuple (A, B, C, D, E).

Finds nonsingular P, Q, T1, T2, V1, V2 with

    A = P S_A Q,  B = P S_B T1,  C = P S_C T2,  D = V1 S_D Q,  E = V2 S_E Q

where the S factors carry identity blocks at fixed positions and a small
free core. The construction runs in seven stages; each stage multiplies the
working copies by elementary block transforms whose inverses are known in
closed form.
"""

from dataclasses import dataclass
from typing import Any

from app.core import (
    DimensionMismatch,
    InternalInconsistency,
    PreconditionViolated,
    get_logger,
)
from app.models.api import MatrixDocument
from app.models.domain import (
    CORE_BLOCKS,
    DimFormulas,
    DimVector,
    QuintInput,
    SimDecomposition,
    VerificationReport,
)
from app.models.qmatrix import QMatrix, assemble, bmat, ctranspose, hstack, mul_all, split, vstack
from app.models.quaternion import ONE, ZERO
from app.services.elimination import canonical_reduce, compress_cols, compress_rows, rank

logger = get_logger(__name__)


# --------------------------------------------------------------------------
# elementary block transforms
# --------------------------------------------------------------------------


def block_diag(*blocks: QMatrix) -> QMatrix:
    return QMatrix.diag(*blocks)


def eye(n: int) -> QMatrix:
    return QMatrix.identity(n)


def shear(n: int, r0: int, c0: int, x: QMatrix) -> tuple[QMatrix, QMatrix]:
    """I - N and its inverse I + N, where N holds ``x`` at (r0, c0).

    The row range of ``x`` and its column range must be disjoint, so N * N = 0.
    From the left this is row_block(r0) -= x * row_block(c0); from the right
    it is col_block(c0) -= col_block(r0) * x.
    """
    if x.rows == 0 or x.cols == 0:
        return eye(n), eye(n)
    rows_hit = range(r0, r0 + x.rows)
    cols_hit = range(c0, c0 + x.cols)
    if set(rows_hit) & set(cols_hit):
        raise InternalInconsistency("Shear block overlaps the diagonal")
    minus = eye(n).to_rows()
    plus = eye(n).to_rows()
    for i in range(x.rows):
        for j in range(x.cols):
            minus[r0 + i][c0 + j] = -x[i, j]
            plus[r0 + i][c0 + j] = x[i, j]
    return QMatrix.from_rows(minus, cols=n), QMatrix.from_rows(plus, cols=n)


def permutation(order: list[int]) -> QMatrix:
    """Matrix R with (R @ M) row i = M row order[i]; its inverse is its transpose."""
    n = len(order)
    return QMatrix(n, n, [ONE if order[i] == j else ZERO for i in range(n) for j in range(n)])


@dataclass
class _Transform:
    matrix: QMatrix
    inverse: QMatrix

    @classmethod
    def identity(cls, n: int) -> "_Transform":
        return cls(eye(n), eye(n))

    def then_left(self, m: QMatrix, m_inv: QMatrix) -> None:
        self.matrix = m @ self.matrix
        self.inverse = self.inverse @ m_inv

    def then_right(self, m: QMatrix, m_inv: QMatrix) -> None:
        self.matrix = self.matrix @ m
        self.inverse = m_inv @ self.inverse


class _Frame:
    """Working copies of the quintuple and the transforms applied so far.

    Invariant: left * A0 * right = A, left * B0 * tb = B, left * C0 * tc = C,
    vd * D0 * right = D and ve * E0 * right = E.
    """

    def __init__(self, q: QuintInput):
        self.A, self.B, self.C, self.D, self.E = q.A, q.B, q.C, q.D, q.E
        self.left = _Transform.identity(q.m)
        self.right = _Transform.identity(q.n)
        self.tb = _Transform.identity(q.p1)
        self.tc = _Transform.identity(q.p2)
        self.vd = _Transform.identity(q.q1)
        self.ve = _Transform.identity(q.q2)

    def rows(self, m: QMatrix, m_inv: QMatrix) -> None:
        self.A, self.B, self.C = m @ self.A, m @ self.B, m @ self.C
        self.left.then_left(m, m_inv)

    def cols(self, m: QMatrix, m_inv: QMatrix) -> None:
        self.A, self.D, self.E = self.A @ m, self.D @ m, self.E @ m
        self.right.then_right(m, m_inv)

    def b_cols(self, m: QMatrix, m_inv: QMatrix) -> None:
        self.B = self.B @ m
        self.tb.then_right(m, m_inv)

    def c_cols(self, m: QMatrix, m_inv: QMatrix) -> None:
        self.C = self.C @ m
        self.tc.then_right(m, m_inv)

    def d_rows(self, m: QMatrix, m_inv: QMatrix) -> None:
        self.D = m @ self.D
        self.vd.then_left(m, m_inv)

    def e_rows(self, m: QMatrix, m_inv: QMatrix) -> None:
        self.E = m @ self.E
        self.ve.then_left(m, m_inv)


def _expect_zero(x: QMatrix, what: str) -> None:
    if not x.is_zero():
        raise InternalInconsistency(f"Expected zero block: {what}")


# --------------------------------------------------------------------------
# coupled canonical forms of [Bp Cp] and [Dp; Ep]
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PairReduction:
    """Shared transform on the coupled side plus one transform per member.

    Row form: transform * [Bp Cp] * diag(first, second) is the coupled template.
    Column form: diag(first, second) * [Dp; Ep] * transform is its dual.
    """

    transform: QMatrix
    transform_inv: QMatrix
    first: QMatrix
    first_inv: QMatrix
    second: QMatrix
    second_inv: QMatrix
    sizes: tuple[int, int, int]


def pair_canonicalize_rows(bp: QMatrix, cp: QMatrix) -> PairReduction:
    """Bring a full-row-rank pair [Bp Cp] to

        [ I_m2  0    0 | 0  0    0    ]
        [ 0     I_m3 0 | 0  I_m3 0    ]
        [ 0     0    0 | 0  0    I_m4 ]

    Raises:
        DimensionMismatch: If Bp and Cp have different row counts
        PreconditionViolated: If [Bp Cp] does not have full row rank
    """
    if bp.rows != cp.rows:
        raise DimensionMismatch(f"Row counts differ: {bp.rows} vs {cp.rows}")
    h, p1, p2 = bp.rows, bp.cols, cp.cols
    if rank(hstack(bp, cp)) != h:
        raise PreconditionViolated("[Bp Cp] must have full row rank")

    left = _Transform.identity(h)
    wb = _Transform.identity(p1)
    wc = _Transform.identity(p2)

    # B part to diag(I_rb, 0)
    red_b = canonical_reduce(bp)
    rb = red_b.rank
    m4 = h - rb
    left.then_left(red_b.P, red_b.P_inv)
    wb.then_right(red_b.Q, red_b.Q_inv)
    c = red_b.P @ cp

    # rows with zero B part: their C part has full row rank, reduce it to [I_m4 0]
    red_c = canonical_reduce(c.submatrix(rb, h, 0, p2))
    if red_c.rank != m4:
        raise InternalInconsistency("Residual C rows lost full row rank")
    step, step_inv = block_diag(eye(rb), red_c.P), block_diag(eye(rb), red_c.P_inv)
    left.then_left(step, step_inv)
    wc.then_right(red_c.Q, red_c.Q_inv)
    c = step @ c @ red_c.Q

    # clear C entries above I_m4; the added rows carry no B part
    step, step_inv = shear(h, 0, rb, c.submatrix(0, rb, 0, m4))
    left.then_left(step, step_inv)
    c = step @ c

    # split the top rows by the rank of what is left of C there
    red_t = canonical_reduce(c.submatrix(0, rb, m4, p2))
    m3 = red_t.rank
    m2 = rb - m3
    top_order = list(range(m3, rb)) + list(range(m3))
    pi = permutation(top_order)
    top = pi @ red_t.P
    top_inv = red_t.P_inv @ ctranspose(pi)
    left.then_left(block_diag(top, eye(m4)), block_diag(top_inv, eye(m4)))
    # undo the disturbance of the B identity with column operations on B
    wb.then_right(block_diag(top_inv, eye(p1 - rb)), block_diag(top, eye(p1 - rb)))
    wc.then_right(block_diag(eye(m4), red_t.Q), block_diag(eye(m4), red_t.Q_inv))

    # C columns currently ordered (m4, m3, rest); the template wants (rest, m3, m4)
    col_order = list(range(m4 + m3, p2)) + list(range(m4, m4 + m3)) + list(range(m4))
    perm = permutation(col_order)
    wc.then_right(ctranspose(perm), perm)

    z = None
    expected = hstack(
        bmat([[eye(m2), QMatrix.zeros(m2, m3), QMatrix.zeros(m2, p1 - rb)],
              [QMatrix.zeros(m3, m2), eye(m3), z],
              [QMatrix.zeros(m4, m2), z, z]]),
        bmat([[QMatrix.zeros(m2, p2 - m3 - m4), QMatrix.zeros(m2, m3), QMatrix.zeros(m2, m4)],
              [z, eye(m3), z],
              [z, z, eye(m4)]]),
    )  # fmt: skip
    if left.matrix @ hstack(bp @ wb.matrix, cp @ wc.matrix) != expected:
        raise InternalInconsistency("Coupled row form does not match its template")

    return PairReduction(
        transform=left.matrix,
        transform_inv=left.inverse,
        first=wb.matrix,
        first_inv=wb.inverse,
        second=wc.matrix,
        second_inv=wc.inverse,
        sizes=(m2, m3, m4),
    )


def pair_canonicalize_cols(dp: QMatrix, ep: QMatrix) -> PairReduction:
    """Dual of :func:`pair_canonicalize_rows` for a full-column-rank pair [Dp; Ep].

    Raises:
        DimensionMismatch: If Dp and Ep have different column counts
        PreconditionViolated: If [Dp; Ep] does not have full column rank
    """
    if dp.cols != ep.cols:
        raise DimensionMismatch(f"Column counts differ: {dp.cols} vs {ep.cols}")
    try:
        dual = pair_canonicalize_rows(ctranspose(dp), ctranspose(ep))
    except PreconditionViolated as e:
        raise PreconditionViolated("[Dp; Ep] must have full column rank") from e
    return PairReduction(
        transform=ctranspose(dual.transform),
        transform_inv=ctranspose(dual.transform_inv),
        first=ctranspose(dual.first),
        first_inv=ctranspose(dual.first_inv),
        second=ctranspose(dual.second),
        second_inv=ctranspose(dual.second_inv),
        sizes=dual.sizes,
    )


# --------------------------------------------------------------------------
# the decomposition
# --------------------------------------------------------------------------


def simultaneous_decompose(q: QuintInput) -> SimDecomposition:
    """Decompose (A, B, C, D, E) into the coupled canonical form."""
    m, n = q.m, q.n
    f = _Frame(q)

    # stage 1: compress [B C] by rows and [D; E] by columns
    comp = compress_rows(hstack(f.B, f.C))
    f.rows(comp.T, comp.T_inv)
    r_bc = comp.rank
    comp = compress_cols(vstack(f.D, f.E))
    f.cols(comp.T, comp.T_inv)
    r_de = comp.rank

    # stage 2: reduce the corner outside both compressed parts
    red = canonical_reduce(f.A.submatrix(r_bc, m, r_de, n))
    m5 = red.rank
    f.rows(block_diag(eye(r_bc), red.P), block_diag(eye(r_bc), red.P_inv))
    f.cols(block_diag(eye(r_de), red.Q), block_diag(eye(r_de), red.Q_inv))

    # stage 3: clear the row and column of I_m5
    s0, t0 = r_bc + m5, r_de + m5
    f.rows(*shear(m, 0, r_bc, f.A.submatrix(0, r_bc, r_de, t0)))
    f.cols(*shear(n, r_de, 0, f.A.submatrix(r_bc, s0, 0, r_de)))
    _expect_zero(f.A.submatrix(0, r_bc, r_de, t0), "above I_m5")
    _expect_zero(f.A.submatrix(r_bc, s0, 0, r_de), "left of I_m5")
    _expect_zero(f.A.submatrix(r_bc, s0, t0, n), "right of I_m5")
    _expect_zero(f.A.submatrix(s0, m, r_de, n), "below I_m5")

    # stage 4: reduce the two off-diagonal blocks to I_m1 and I_m6
    red_top = canonical_reduce(f.A.submatrix(0, r_bc, t0, n))
    red_bottom = canonical_reduce(f.A.submatrix(s0, m, 0, r_de))
    m1, m6 = red_top.rank, red_bottom.rank
    f.rows(
        block_diag(red_top.P, eye(m5), red_bottom.P),
        block_diag(red_top.P_inv, eye(m5), red_bottom.P_inv),
    )
    f.cols(
        block_diag(red_bottom.Q, eye(m5), red_top.Q),
        block_diag(red_bottom.Q_inv, eye(m5), red_top.Q_inv),
    )

    # stage 5: I_m1 clears its rows, I_m6 clears its columns
    f.cols(*shear(n, t0, 0, f.A.submatrix(0, m1, 0, r_de)))
    f.rows(*shear(m, 0, s0, f.A.submatrix(0, r_bc, 0, m6)))
    _expect_zero(f.A.submatrix(0, m1, 0, t0), "left of I_m1")
    _expect_zero(f.A.submatrix(m1, m, t0, t0 + m1), "below I_m1")
    _expect_zero(f.A.submatrix(0, s0, 0, m6), "above I_m6")
    _expect_zero(f.A.submatrix(s0, s0 + m6, m6, n), "right of I_m6")

    # stage 6: coupled forms of the remaining B/C rows and D/E columns
    pair_r = pair_canonicalize_rows(f.B.submatrix(m1, r_bc, 0, q.p1), f.C.submatrix(m1, r_bc, 0, q.p2))
    m2, m3, m4 = pair_r.sizes
    rest = m - r_bc
    f.rows(
        block_diag(eye(m1), pair_r.transform, eye(rest)),
        block_diag(eye(m1), pair_r.transform_inv, eye(rest)),
    )
    f.b_cols(pair_r.first, pair_r.first_inv)
    f.c_cols(pair_r.second, pair_r.second_inv)

    pair_c = pair_canonicalize_cols(f.D.submatrix(0, q.q1, m6, r_de), f.E.submatrix(0, q.q2, m6, r_de))
    n2, n3, n4 = pair_c.sizes
    rest = n - r_de
    f.cols(
        block_diag(eye(m6), pair_c.transform, eye(rest)),
        block_diag(eye(m6), pair_c.transform_inv, eye(rest)),
    )
    f.d_rows(pair_c.first, pair_c.first_inv)
    f.e_rows(pair_c.second, pair_c.second_inv)

    dims = DimVector(
        m1=m1, m2=m2, m3=m3, m4=m4, m5=m5, m6=m6, m7=m - s0 - m6,
        n2=n2, n3=n3, n4=n4, n7=n - t0 - m1,
        p1=q.p1, p2=q.p2, q1=q.q1, q2=q.q2,
    )  # fmt: skip
    if not dims.is_nonnegative():
        raise InternalInconsistency(f"Negative block size in {dims.as_dict()}")

    # stage 7: the rows of I_m1 pick up B/C leftovers in the m2, m3, m4
    # columns, the columns of I_m6 pick up D/E leftovers; clear them through
    # the identity blocks of stage 6, then use I_m1 / I_m6 as pivots
    wc1 = dims.wC1
    phi = hstack(
        f.B.submatrix(0, m1, 0, m2),
        f.B.submatrix(0, m1, m2, m2 + m3),
        f.C.submatrix(0, m1, wc1 + m3, wc1 + m3 + m4),
    )
    f.rows(*shear(m, 0, m1, phi))
    f.cols(*shear(n, t0, m6, f.A.submatrix(0, m1, m6, r_de)))

    he1 = dims.hE1
    psi = vstack(
        f.D.submatrix(0, n2, 0, m6),
        f.D.submatrix(n2, n2 + n3, 0, m6),
        f.E.submatrix(he1 + n3, he1 + n3 + n4, 0, m6),
    )
    f.cols(*shear(n, m6, 0, psi))
    f.rows(*shear(m, m1, s0, f.A.submatrix(m1, r_bc, 0, m6)))

    _expect_zero(f.B.submatrix(0, m1, 0, m2 + m3), "B leftovers beside I_m1")
    _expect_zero(f.C.submatrix(0, m1, wc1 + m3, q.p2), "C leftovers beside I_m1")
    _expect_zero(f.D.submatrix(0, n2 + n3, 0, m6), "D leftovers beside I_m6")
    _expect_zero(f.E.submatrix(he1 + n3, q.q2, 0, m6), "E leftovers beside I_m6")

    core = _read_core(f, dims)
    logger.debug("simultaneous_decompose", extra={"extra": {"dims": dims.as_dict()}})

    dec = SimDecomposition(
        P=f.left.inverse,
        P_inv=f.left.matrix,
        Q=f.right.inverse,
        Q_inv=f.right.matrix,
        T1=f.tb.inverse,
        T1_inv=f.tb.matrix,
        T2=f.tc.inverse,
        T2_inv=f.tc.matrix,
        V1=f.vd.inverse,
        V1_inv=f.vd.matrix,
        V2=f.ve.inverse,
        V2_inv=f.ve.matrix,
        S_A=f.A,
        S_B=f.B,
        S_C=f.C,
        S_D=f.D,
        S_E=f.E,
        dims=dims,
        core=core,
        rank_a3=rank(core["A3"]),
        rank_a7=rank(core["A7"]),
    )

    expected = template_factors(dims, core)
    for name, actual in dec.factors().items():
        if actual != expected[name]:
            raise InternalInconsistency(f"{name} does not match its block template")
    return dec


def _read_core(f: _Frame, dims: DimVector) -> dict[str, QMatrix]:
    a_blocks = split(dims.spec_a(), f.A)
    grid = [row[1:4] for row in a_blocks[1:4]]
    core = {f"A{3 * i + j + 1}": grid[i][j] for i in range(3) for j in range(3)}
    b_blocks = split(dims.spec_b(), f.B)
    c_blocks = split(dims.spec_c(), f.C)
    d_blocks = split(dims.spec_d(), f.D)
    e_blocks = split(dims.spec_e(), f.E)
    core["B1"] = b_blocks[0][2]
    core["C1"] = c_blocks[0][0]
    core["C2"] = c_blocks[0][1]
    core["D1"] = d_blocks[2][0]
    core["E1"] = e_blocks[0][0]
    core["E2"] = e_blocks[1][0]
    return core


def template_factors(dims: DimVector, core: dict[str, QMatrix]) -> dict[str, QMatrix]:
    """The five structured factors for the given block sizes and core blocks."""
    d = dims
    i_m1, i_m2, i_m3, i_m4 = eye(d.m1), eye(d.m2), eye(d.m3), eye(d.m4)
    i_m5, i_m6, i_n2, i_n3, i_n4 = eye(d.m5), eye(d.m6), eye(d.n2), eye(d.n3), eye(d.n4)
    z = None
    s_a = assemble(
        d.spec_a(),
        [
            [z, z, z, z, z, i_m1, z],
            [z, core["A1"], core["A2"], core["A3"], z, z, z],
            [z, core["A4"], core["A5"], core["A6"], z, z, z],
            [z, core["A7"], core["A8"], core["A9"], z, z, z],
            [z, z, z, z, i_m5, z, z],
            [i_m6, z, z, z, z, z, z],
            [z, z, z, z, z, z, z],
        ],
    )
    s_b = assemble(
        d.spec_b(),
        [[z, z, core["B1"]], [i_m2, z, z], [z, i_m3, z], [z, z, z], [z, z, z], [z, z, z], [z, z, z]],
    )
    s_c = assemble(
        d.spec_c(),
        [[core["C1"], core["C2"], z], [z, z, z], [z, i_m3, z], [z, z, i_m4], [z, z, z], [z, z, z], [z, z, z]],
    )
    s_d = assemble(
        d.spec_d(),
        [
            [z, i_n2, z, z, z, z, z],
            [z, z, i_n3, z, z, z, z],
            [core["D1"], z, z, z, z, z, z],
        ],
    )
    s_e = assemble(
        d.spec_e(),
        [
            [core["E1"], z, z, z, z, z, z],
            [core["E2"], z, i_n3, z, z, z, z],
            [z, z, z, i_n4, z, z, z],
        ],
    )
    return {"S_A": s_a, "S_B": s_b, "S_C": s_c, "S_D": s_d, "S_E": s_e}


# --------------------------------------------------------------------------
# rank formulas and verification
# --------------------------------------------------------------------------


def bordered_rank(grid: list[list[QMatrix | None]]) -> int:
    """Rank of a block matrix; ``None`` marks a zero block."""
    return rank(bmat(grid))


def dims_from_ranks(q: QuintInput) -> DimFormulas:
    """Block sizes from ranks of bordered matrices of the input."""
    A, B, C, D, E = q.A, q.B, q.C, q.D, q.E
    r_abc = bordered_rank([[A, B, C]])
    r_ade = bordered_rank([[A], [D], [E]])
    r_full = bordered_rank([[A, B, C], [D, None, None], [E, None, None]])
    r_ac_de = bordered_rank([[A, C], [D, None], [E, None]])
    r_ab_de = bordered_rank([[A, B], [D, None], [E, None]])
    r_abc_e = bordered_rank([[A, B, C], [E, None, None]])
    r_abc_d = bordered_rank([[A, B, C], [D, None, None]])
    formulas = DimFormulas(
        m156=r_abc + r_ade - r_full,
        m2=r_full - r_ac_de,
        m4=r_full - r_ab_de,
        m3=r_ab_de + r_ac_de - r_full - r_ade,
        n2=r_full - r_abc_e,
        n4=r_full - r_abc_d,
        n3=r_abc_d + r_abc_e - r_full - r_abc,
    )
    logger.debug("dims_from_ranks", extra={"extra": formulas.as_dict()})
    return formulas


def verify_decomposition(q: QuintInput, dec: SimDecomposition) -> VerificationReport:
    """Check reconstruction, block templates and dimension formulas.

    Malformed decompositions are reported as failed checks, never raised.
    """
    report = VerificationReport()

    for name, (t, t_inv) in dec.transforms().items():
        try:
            ok = (t @ t_inv).is_identity() and (t_inv @ t).is_identity()
            report.add(f"inverse:{name}", ok)
        except DimensionMismatch as e:
            report.add(f"inverse:{name}", False, str(e))

    reconstructions = {
        "A": (q.A, lambda: mul_all(dec.P, dec.S_A, dec.Q)),
        "B": (q.B, lambda: mul_all(dec.P, dec.S_B, dec.T1)),
        "C": (q.C, lambda: mul_all(dec.P, dec.S_C, dec.T2)),
        "D": (q.D, lambda: mul_all(dec.V1, dec.S_D, dec.Q)),
        "E": (q.E, lambda: mul_all(dec.V2, dec.S_E, dec.Q)),
    }
    for name, (original, rebuild) in reconstructions.items():
        try:
            report.add(f"reconstruct:{name}", rebuild() == original)
        except DimensionMismatch as e:
            report.add(f"reconstruct:{name}", False, str(e))

    dims = dec.dims
    report.add("dims:nonnegative", dims.is_nonnegative(), str(dims.as_dict()))
    try:
        expected = template_factors(dims, dec.core)
        for name, actual in dec.factors().items():
            report.add(f"template:{name}", actual == expected[name])
    except (DimensionMismatch, KeyError) as e:
        report.add("template", False, f"{type(e).__name__}: {e}")

    formulas = dims_from_ranks(q)
    pairs = {
        "m1+m5+m6": (dims.m1 + dims.m5 + dims.m6, formulas.m156),
        "m2": (dims.m2, formulas.m2),
        "m3": (dims.m3, formulas.m3),
        "m4": (dims.m4, formulas.m4),
        "n2": (dims.n2, formulas.n2),
        "n3": (dims.n3, formulas.n3),
        "n4": (dims.n4, formulas.n4),
    }
    for name, (constructive, formula) in pairs.items():
        report.add(f"formula:{name}", constructive == formula, f"{constructive} vs {formula}")

    r_ab_e = bordered_rank([[q.A, q.B], [q.E, None]])
    r_ac_d = bordered_rank([[q.A, q.C], [q.D, None]])
    try:
        r_a3, r_a7 = rank(dec.core["A3"]), rank(dec.core["A7"])
    except KeyError as e:
        report.add("core", False, f"missing block {e}")
        r_a3 = r_a7 = 0
    lhs_b = dims.m1 + dims.m2 + dims.m3 + r_a7 + dims.m5 + dims.m6 + dims.n3 + dims.n4
    lhs_c = dims.m1 + dims.n2 + dims.n3 + dims.m3 + dims.m4 + r_a3 + dims.m5 + dims.m6
    report.add("rank:[A B; E 0]", lhs_b == r_ab_e, f"{lhs_b} vs {r_ab_e}")
    report.add("rank:[A C; D 0]", lhs_c == r_ac_d, f"{lhs_c} vs {r_ac_d}")

    if not report.passed:
        logger.warning(
            "Decomposition verification failed",
            extra={"extra": {"failed": [c.name for c in report.failures()]}},
        )
    return report


def decomposition_document(dec: SimDecomposition, report: VerificationReport) -> dict[str, Any]:
    """JSON-ready document with every transform, factor, size and core block."""
    def doc(x: QMatrix) -> dict[str, Any]:
        return MatrixDocument.from_qmatrix(x).model_dump()

    return {
        "dims": dec.dims.as_dict(),
        "transforms": {name: doc(t) for name, (t, _) in dec.transforms().items()},
        "factors": {name: doc(s) for name, s in dec.factors().items()},
        "core": {name: doc(dec.core[name]) for name in CORE_BLOCKS},
        "rank_A3": dec.rank_a3,
        "rank_A7": dec.rank_a7,
        "verification": {
            "passed": report.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
        },
    }
