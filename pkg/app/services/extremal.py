"""Maximal and minimal ranks of linear quaternion matrix expressions.

Four expressions are covered, each with closed-form extremal ranks in terms
of bordered matrices and explicit variable choices attaining them:

    p(X, Y)         = A - B X D - C Y E
    f1(X, Y)        = A - B X - Y C
    f2(X1..X4)      = A - B1 X1 - X2 C2 - B3 X3 C3 - B4 X4 C4
    f3(X1..X4)      = A - B1 X1 C1 - B2 X2 C2 - B3 X3 C3 - B4 X4 C4

Witnesses for p come from the simultaneous decomposition: the rank of p
equals m1 + m5 + m6 + r(Omega) where Omega is a 3x3 block matrix whose only
fixed blocks are A3 and A7. The other expressions reduce to p in stages.
"""

from typing import Callable, Mapping

from app.core import DimensionMismatch, InternalInconsistency, PreconditionViolated, get_logger
from app.models.domain import ExtremalReport, QuintInput, SimDecomposition
from app.models.qmatrix import BlockSpec, QMatrix, assemble, ctranspose, hstack, mul_all, split
from app.models.quaternion import ONE, ZERO
from app.services.elimination import canonical_reduce, inner_inverse, rank
from app.services.simdecomp import bordered_rank, simultaneous_decompose

logger = get_logger(__name__)

Witness = dict[str, QMatrix]

P_MAX_TERMS = ("r[A;D;E]", "r[A B C]", "r[A B;E 0]", "r[A C;D 0]")


def subspace_contained(u: QMatrix, v: QMatrix) -> bool:
    """Whether the column space of U lies in that of V."""
    if u.rows != v.rows:
        raise DimensionMismatch(f"Row counts differ: {u.rows} vs {v.rows}")
    return rank(hstack(u, v)) == rank(v)


def min_completion_single_block(a11: QMatrix, a12: QMatrix, a21: QMatrix) -> tuple[QMatrix, int]:
    """Choose M minimising rank [[A11, A12], [A21, M]].

    M = A21 * A11^- * A12 gives rank r[A11 A12] + r[A11; A21] - r(A11).
    """
    if a11.rows != a12.rows or a11.cols != a21.cols:
        raise DimensionMismatch("Blocks do not fit the [[A11, A12], [A21, M]] pattern")
    m = mul_all(a21, inner_inverse(a11), a12)
    value = bordered_rank([[a11, a12]]) + bordered_rank([[a11], [a21]]) - rank(a11)
    return m, value


# --------------------------------------------------------------------------
# expression evaluation
# --------------------------------------------------------------------------


def evaluate_p(q: QuintInput, x: QMatrix, y: QMatrix) -> QMatrix:
    return q.A - mul_all(q.B, x, q.D) - mul_all(q.C, y, q.E)


def evaluate_expression(
    kind: str, coeffs: Mapping[str, QMatrix], variables: Mapping[str, QMatrix]
) -> QMatrix:
    c, v = coeffs, variables
    if kind == "p":
        return evaluate_p(QuintInput(c["A"], c["B"], c["C"], c["D"], c["E"]), v["X"], v["Y"])
    if kind == "f1":
        return c["A"] - c["B"] @ v["X"] - v["Y"] @ c["C"]
    if kind == "f2":
        return (
            c["A"]
            - c["B1"] @ v["X1"]
            - v["X2"] @ c["C2"]
            - mul_all(c["B3"], v["X3"], c["C3"])
            - mul_all(c["B4"], v["X4"], c["C4"])
        )
    if kind == "f3":
        out = c["A"]
        for i in range(1, 5):
            out = out - mul_all(c[f"B{i}"], v[f"X{i}"], c[f"C{i}"])
        return out
    raise ValueError(f"Unknown expression kind: {kind}")


# --------------------------------------------------------------------------
# p(X, Y) = A - B X D - C Y E
# --------------------------------------------------------------------------


def p_formulas(q: QuintInput) -> tuple[int, int, str]:
    """(max, min, name of the bound attaining the max) for p."""
    A, B, C, D, E = q.A, q.B, q.C, q.D, q.E
    r_ade = bordered_rank([[A], [D], [E]])
    r_abc = bordered_rank([[A, B, C]])
    r_ab_e = bordered_rank([[A, B], [E, None]])
    r_ac_d = bordered_rank([[A, C], [D, None]])
    terms = (r_ade, r_abc, r_ab_e, r_ac_d)
    max_rank = min(terms)
    max_term = P_MAX_TERMS[terms.index(max_rank)]

    r_abc_e = bordered_rank([[A, B, C], [E, None, None]])
    r_ab_de = bordered_rank([[A, B], [D, None], [E, None]])
    r_abc_d = bordered_rank([[A, B, C], [D, None, None]])
    r_ac_de = bordered_rank([[A, C], [D, None], [E, None]])
    min_rank = r_ade + r_abc + max(r_ab_e - r_abc_e - r_ab_de, r_ac_d - r_abc_d - r_ac_de)
    return max_rank, min_rank, max_term


def _omega_fixed_cells(dec: SimDecomposition) -> tuple[int, int]:
    return dec.rank_a3, dec.rank_a7


def _max_matching_pattern(dec: SimDecomposition) -> set[tuple[int, int]]:
    """Free cells of the reduced Omega to set to one for the largest rank.

    In reduced coordinates Omega' has I_a in its (1, 3) block and I_b in its
    (3, 1) block. A maximum matching over the free cells plus those identity
    cells, with the cells Ra x Cb and Rb x Ca left out, gives a support that is
    triangular after reordering, so its rank equals the matching size.
    """
    d = dec.dims
    a, b = _omega_fixed_cells(dec)
    m2, m3, m4 = d.m2, d.m3, d.m4
    n2, n3, n4 = d.n2, d.n3, d.n4
    rows, cols = m2 + m3 + m4, n2 + n3 + n4
    r3, c3 = m2 + m3, n2 + n3

    def allowed(r: int, c: int) -> bool:
        rb = 1 if r < m2 else (2 if r < r3 else 3)
        cb = 1 if c < n2 else (2 if c < c3 else 3)
        if rb == 1 and cb == 3:
            return r < a and c - c3 == r
        if rb == 3 and cb == 1:
            return r - r3 < b and c == r - r3
        if rb == 1 and cb == 1:
            return not (r < a and c < b)
        if rb == 3 and cb == 3:
            return not (r - r3 < b and c - c3 < a)
        return True

    adjacency = [[c for c in range(cols) if allowed(r, c)] for r in range(rows)]
    match_of_col: dict[int, int] = {}

    def augment(r: int, seen: set[int]) -> bool:
        for c in adjacency[r]:
            if c in seen:
                continue
            seen.add(c)
            if c not in match_of_col or augment(match_of_col[c], seen):
                match_of_col[c] = r
                return True
        return False

    for r in range(rows):
        augment(r, set())

    fixed = {(i, c3 + i) for i in range(a)} | {(r3 + j, j) for j in range(b)}
    return {(r, c) for c, r in match_of_col.items() if (r, c) not in fixed}


def _omega_witness(dec: SimDecomposition, target: str) -> tuple[QMatrix, QMatrix]:
    """(X, Y) driving r(Omega) to its lower (``"min"``) or upper (``"max"``) bound."""
    d = dec.dims
    core = dec.core
    m2, m3, m4 = d.m2, d.m3, d.m4
    n2, n3, n4 = d.n2, d.n3, d.n4
    a, b = _omega_fixed_cells(dec)
    rows, cols = m2 + m3 + m4, n2 + n3 + n4

    red3 = canonical_reduce(core["A3"])
    red7 = canonical_reduce(core["A7"])

    if target == "min":
        k = min(a, b)
        ones = {(i, i) for i in range(k)} | {(m2 + m3 + i, n2 + n3 + i) for i in range(k)}
    else:
        ones = _max_matching_pattern(dec)

    reduced = [[ZERO] * cols for _ in range(rows)]
    for r, c in ones:
        reduced[r][c] = ONE
    for i in range(a):
        reduced[i][n2 + n3 + i] = ONE
    for j in range(b):
        reduced[m2 + m3 + j][j] = ONE
    omega_reduced = QMatrix.from_rows(reduced, cols=cols)

    left = QMatrix.diag(red3.P_inv, QMatrix.identity(m3), red7.P_inv)
    right = QMatrix.diag(red7.Q_inv, QMatrix.identity(n3), red3.Q_inv)
    omega = mul_all(left, omega_reduced, right)

    blocks = split(d.spec_core(), omega)
    if blocks[0][2] != core["A3"] or blocks[2][0] != core["A7"]:
        raise InternalInconsistency("Omega lost its fixed blocks A3/A7")
    z1, z2 = blocks[0][0], blocks[0][1]
    z3, z4, z5 = blocks[1][0], blocks[1][1], blocks[1][2]
    z6, z7 = blocks[2][1], blocks[2][2]

    o = None
    # the whole coupled block A5 - X5 - Y5 is carried by X5; Y5 stays zero
    x_hat = assemble(
        d.spec_x(),
        [
            [core["A1"] - z1, core["A2"] - z2, o],
            [core["A4"] - z3, core["A5"] - z4, o],
            [o, o, o],
        ],
    )
    y_hat = assemble(
        d.spec_y(),
        [
            [o, o, o],
            [o, o, core["A6"] - z5],
            [o, core["A8"] - z6, core["A9"] - z7],
        ],
    )
    x = mul_all(dec.T1_inv, x_hat, dec.V1_inv)
    y = mul_all(dec.T2_inv, y_hat, dec.V2_inv)
    return x, y


def p_witnesses(q: QuintInput, dec: SimDecomposition | None = None) -> tuple[Witness, Witness]:
    """(max witness, min witness) for p, built from the decomposition."""
    dec = dec or simultaneous_decompose(q)
    x_max, y_max = _omega_witness(dec, "max")
    x_min, y_min = _omega_witness(dec, "min")
    return {"X": x_max, "Y": y_max}, {"X": x_min, "Y": y_min}


def extremal_ranks_p(q: QuintInput) -> ExtremalReport:
    """Extremal ranks of A - B X D - C Y E with attaining (X, Y)."""
    max_rank, min_rank, max_term = p_formulas(q)
    max_w, min_w = p_witnesses(q)
    got_max = rank(evaluate_p(q, max_w["X"], max_w["Y"]))
    got_min = rank(evaluate_p(q, min_w["X"], min_w["Y"]))
    if (got_max, got_min) != (max_rank, min_rank):
        raise InternalInconsistency(
            f"Witness ranks ({got_max}, {got_min}) miss the bounds ({max_rank}, {min_rank})"
        )
    logger.debug(
        "extremal_ranks_p",
        extra={"extra": {"max_rank": max_rank, "min_rank": min_rank, "max_term": max_term}},
    )
    return ExtremalReport("p", max_rank, min_rank, max_w, min_w, max_term=max_term)


def p_contained_formulas(q: QuintInput) -> tuple[int, int, str]:
    A, B, C, D, E = q.A, q.B, q.C, q.D, q.E
    r_ad = bordered_rank([[A], [D]])
    r_ac = bordered_rank([[A, C]])
    r_ab_e = bordered_rank([[A, B], [E, None]])
    r_ac_e = bordered_rank([[A, C], [E, None]])
    r_ab_d = bordered_rank([[A, B], [D, None]])
    terms = (r_ad, r_ac, r_ab_e)
    max_rank = min(terms)
    max_term = ("r[A;D]", "r[A C]", "r[A B;E 0]")[terms.index(max_rank)]
    min_rank = r_ad + r_ac + r_ab_e - r_ac_e - r_ab_d
    return max_rank, min_rank, max_term


def extremal_ranks_p_contained(q: QuintInput) -> ExtremalReport:
    """Extremal ranks of p when R(B) is in R(C) and R(E*) is in R(D*).

    Raises:
        PreconditionViolated: If either containment fails
    """
    if not subspace_contained(q.B, q.C):
        raise PreconditionViolated("Column space of B is not contained in that of C")
    if not subspace_contained(ctranspose(q.E), ctranspose(q.D)):
        raise PreconditionViolated("Row space of E is not contained in that of D")

    max_rank, min_rank, max_term = p_contained_formulas(q)
    general_max, general_min, _ = p_formulas(q)
    if (max_rank, min_rank) != (general_max, general_min):
        raise InternalInconsistency(
            f"Contained-case bounds ({max_rank}, {min_rank}) disagree with the general "
            f"bounds ({general_max}, {general_min})"
        )
    max_w, min_w = p_witnesses(q)
    return ExtremalReport("p_contained", max_rank, min_rank, max_w, min_w, max_term=max_term)


# --------------------------------------------------------------------------
# f1(X, Y) = A - B X - Y C
# --------------------------------------------------------------------------


def f1_formulas(a: QMatrix, b: QMatrix, c: QMatrix) -> tuple[int, int, str]:
    r_abc0 = bordered_rank([[a, b], [c, None]])
    terms = (a.rows, a.cols, r_abc0)
    max_rank = min(terms)
    max_term = ("m", "n", "r[A B;C 0]")[terms.index(max_rank)]
    return max_rank, r_abc0 - rank(b) - rank(c), max_term


def _f1_witnesses(a: QMatrix, b: QMatrix, c: QMatrix) -> tuple[Witness, Witness]:
    if b.rows != a.rows or c.cols != a.cols:
        raise DimensionMismatch("f1 needs B with as many rows as A and C with as many columns")
    q = QuintInput(A=a, B=b, C=QMatrix.identity(a.rows), D=QMatrix.identity(a.cols), E=c)
    return p_witnesses(q)


def extremal_ranks_f1(a: QMatrix, b: QMatrix, c: QMatrix) -> ExtremalReport:
    """Extremal ranks of A - B X - Y C."""
    max_rank, min_rank, max_term = f1_formulas(a, b, c)
    max_w, min_w = _f1_witnesses(a, b, c)
    coeffs = {"A": a, "B": b, "C": c}
    got = (
        rank(evaluate_expression("f1", coeffs, max_w)),
        rank(evaluate_expression("f1", coeffs, min_w)),
    )
    if got != (max_rank, min_rank):
        raise InternalInconsistency(f"f1 witness ranks {got} miss ({max_rank}, {min_rank})")
    return ExtremalReport("f1", max_rank, min_rank, max_w, min_w, max_term=max_term)


# --------------------------------------------------------------------------
# f2 and f3: stage the two-sided terms first
# --------------------------------------------------------------------------


def _bordered_family(
    a: QMatrix, b1: QMatrix, c2: QMatrix, b3: QMatrix, c3: QMatrix, b4: QMatrix, c4: QMatrix
) -> dict[str, int]:
    """Ranks of the bordered matrices shared by the f2 and f3 formulas."""
    z = None
    return {
        "r[A B1;C2 0;C3 0;C4 0]": bordered_rank([[a, b1], [c2, z], [c3, z], [c4, z]]),
        "r[A B1 B3 B4;C2 0 0 0]": bordered_rank([[a, b1, b3, b4], [c2, z, z, z]]),
        "r[A B1 B3;C2 0 0;C4 0 0]": bordered_rank([[a, b1, b3], [c2, z, z], [c4, z, z]]),
        "r[A B1 B4;C2 0 0;C3 0 0]": bordered_rank([[a, b1, b4], [c2, z, z], [c3, z, z]]),
        "r[A B1 B3 B4;C2 0 0 0;C4 0 0 0]": bordered_rank([[a, b1, b3, b4], [c2, z, z, z], [c4, z, z, z]]),
        "r[A B1 B3;C2 0 0;C3 0 0;C4 0 0]": bordered_rank([[a, b1, b3], [c2, z, z], [c3, z, z], [c4, z, z]]),
        "r[A B1 B3 B4;C2 0 0 0;C3 0 0 0]": bordered_rank([[a, b1, b3, b4], [c2, z, z, z], [c3, z, z, z]]),
        "r[A B1 B4;C2 0 0;C3 0 0;C4 0 0]": bordered_rank([[a, b1, b4], [c2, z, z], [c3, z, z], [c4, z, z]]),
    }


def _staged_correction(r: dict[str, int]) -> int:
    return max(
        r["r[A B1 B3;C2 0 0;C4 0 0]"]
        - r["r[A B1 B3 B4;C2 0 0 0;C4 0 0 0]"]
        - r["r[A B1 B3;C2 0 0;C3 0 0;C4 0 0]"],
        r["r[A B1 B4;C2 0 0;C3 0 0]"]
        - r["r[A B1 B3 B4;C2 0 0 0;C3 0 0 0]"]
        - r["r[A B1 B4;C2 0 0;C3 0 0;C4 0 0]"],
    )


_STAGE_MAX_TERMS = (
    "r[A B1;C2 0;C3 0;C4 0]",
    "r[A B1 B3 B4;C2 0 0 0]",
    "r[A B1 B3;C2 0 0;C4 0 0]",
    "r[A B1 B4;C2 0 0;C3 0 0]",
)


def _two_sided_stage(
    a: QMatrix, b1: QMatrix, c2: QMatrix, b3: QMatrix, c3: QMatrix, b4: QMatrix, c4: QMatrix
) -> tuple[Witness, Witness]:
    """(X3, X4) extremising r[A - B3 X3 C3 - B4 X4 C4, B1; C2, 0]."""
    k1, l2 = b1.cols, c2.rows
    bordered = QuintInput(
        A=assemble(BlockSpec([a.rows, l2], [a.cols, k1]), [[a, b1], [c2, None]]),
        B=assemble(BlockSpec([a.rows, l2], [b3.cols]), [[b3], [None]]),
        C=assemble(BlockSpec([a.rows, l2], [b4.cols]), [[b4], [None]]),
        D=assemble(BlockSpec([c3.rows], [a.cols, k1]), [[c3, None]]),
        E=assemble(BlockSpec([c4.rows], [a.cols, k1]), [[c4, None]]),
    )
    max_w, min_w = p_witnesses(bordered)
    return {"X3": max_w["X"], "X4": max_w["Y"]}, {"X3": min_w["X"], "X4": min_w["Y"]}


def _check_f2_shapes(
    a: QMatrix, b1: QMatrix, c2: QMatrix, b3: QMatrix, c3: QMatrix, b4: QMatrix, c4: QMatrix
) -> None:
    if not (a.rows == b1.rows == b3.rows == b4.rows):
        raise DimensionMismatch("A, B1, B3, B4 must share a row count")
    if not (a.cols == c2.cols == c3.cols == c4.cols):
        raise DimensionMismatch("A, C2, C3, C4 must share a column count")


def _finish(kind: str, coeffs: dict[str, QMatrix], max_rank: int, min_rank: int, max_term: str,
            max_w: Witness, min_w: Witness) -> ExtremalReport:  # fmt: skip
    got_max = rank(evaluate_expression(kind, coeffs, max_w))
    got_min = rank(evaluate_expression(kind, coeffs, min_w))
    verified = got_max == max_rank and got_min == min_rank
    if not verified:
        logger.warning(
            "Staged witness misses its formula value",
            extra={"extra": {"kind": kind, "formula": [max_rank, min_rank], "witness": [got_max, got_min]}},
        )
    return ExtremalReport(kind, max_rank, min_rank, max_w, min_w, max_term=max_term, verified=verified)


def extremal_ranks_f2(
    a: QMatrix, b1: QMatrix, c2: QMatrix, b3: QMatrix, c3: QMatrix, b4: QMatrix, c4: QMatrix
) -> ExtremalReport:
    """Extremal ranks of A - B1 X1 - X2 C2 - B3 X3 C3 - B4 X4 C4."""
    _check_f2_shapes(a, b1, c2, b3, c3, b4, c4)
    r = _bordered_family(a, b1, c2, b3, c3, b4, c4)
    terms = {"m": a.rows, "n": a.cols, **{t: r[t] for t in _STAGE_MAX_TERMS}}
    max_term = min(terms, key=lambda t: terms[t])
    max_rank = terms[max_term]
    min_rank = (
        r["r[A B1;C2 0;C3 0;C4 0]"]
        + r["r[A B1 B3 B4;C2 0 0 0]"]
        - rank(b1)
        - rank(c2)
        + _staged_correction(r)
    )

    stage_max, stage_min = _two_sided_stage(a, b1, c2, b3, c3, b4, c4)
    witnesses: list[Witness] = []
    for stage, pick in ((stage_max, 0), (stage_min, 1)):
        residual = a - mul_all(b3, stage["X3"], c3) - mul_all(b4, stage["X4"], c4)
        inner = _f1_witnesses(residual, b1, c2)[pick]
        witnesses.append({"X1": inner["X"], "X2": inner["Y"], **stage})

    coeffs = {"A": a, "B1": b1, "C2": c2, "B3": b3, "C3": c3, "B4": b4, "C4": c4}
    return _finish("f2", coeffs, max_rank, min_rank, max_term, witnesses[0], witnesses[1])


def extremal_ranks_f3(
    a: QMatrix,
    b1: QMatrix,
    b2: QMatrix,
    b3: QMatrix,
    b4: QMatrix,
    c1: QMatrix,
    c2: QMatrix,
    c3: QMatrix,
    c4: QMatrix,
) -> ExtremalReport:
    """Extremal ranks of A - sum Bi Xi Ci when every Bi lies in R(B2) and every Ci* in R(C1*).

    Raises:
        PreconditionViolated: If a containment fails
    """
    _check_f2_shapes(a, b1, c2, b3, c3, b4, c4)
    if b2.rows != a.rows or c1.cols != a.cols:
        raise DimensionMismatch("B2 must match A's rows and C1 its columns")
    for name, bi in (("B1", b1), ("B3", b3), ("B4", b4)):
        if not subspace_contained(bi, b2):
            raise PreconditionViolated(f"Column space of {name} is not contained in that of B2")
    for name, cj in (("C2", c2), ("C3", c3), ("C4", c4)):
        if not subspace_contained(ctranspose(cj), ctranspose(c1)):
            raise PreconditionViolated(f"Row space of {name} is not contained in that of C1")

    r = _bordered_family(a, b1, c2, b3, c3, b4, c4)
    r_ab2 = bordered_rank([[a, b2]])
    r_ac1 = bordered_rank([[a], [c1]])
    terms = {"r[A B2]": r_ab2, "r[A;C1]": r_ac1, **{t: r[t] for t in _STAGE_MAX_TERMS}}
    max_term = min(terms, key=lambda t: terms[t])
    max_rank = terms[max_term]
    min_rank = (
        r["r[A B1;C2 0;C3 0;C4 0]"]
        + r["r[A B1 B3 B4;C2 0 0 0]"]
        + r_ac1
        + r_ab2
        - bordered_rank([[a, b1], [c1, None]])
        - bordered_rank([[a, b2], [c2, None]])
        + _staged_correction(r)
    )

    stage_max, stage_min = _two_sided_stage(a, b1, c2, b3, c3, b4, c4)
    witnesses: list[Witness] = []
    for stage, pick in ((stage_max, 0), (stage_min, 1)):
        residual = a - mul_all(b3, stage["X3"], c3) - mul_all(b4, stage["X4"], c4)
        inner_q = QuintInput(A=residual, B=b1, C=b2, D=c1, E=c2)
        inner = p_witnesses(inner_q)[pick]
        witnesses.append({"X1": inner["X"], "X2": inner["Y"], **stage})

    coeffs = {
        "A": a, "B1": b1, "B2": b2, "B3": b3, "B4": b4,
        "C1": c1, "C2": c2, "C3": c3, "C4": c4,
    }  # fmt: skip
    return _finish("f3", coeffs, max_rank, min_rank, max_term, witnesses[0], witnesses[1])


# --------------------------------------------------------------------------
# dispatch by expression kind
# --------------------------------------------------------------------------

COEFFICIENTS: dict[str, tuple[str, ...]] = {
    "p": ("A", "B", "C", "D", "E"),
    "f1": ("A", "B", "C"),
    "f2": ("A", "B1", "C2", "B3", "C3", "B4", "C4"),
    "f3": ("A", "B1", "B2", "B3", "B4", "C1", "C2", "C3", "C4"),
}

_DISPATCH: dict[str, Callable[..., ExtremalReport]] = {
    "p": lambda c: extremal_ranks_p(QuintInput(c["A"], c["B"], c["C"], c["D"], c["E"])),
    "f1": lambda c: extremal_ranks_f1(c["A"], c["B"], c["C"]),
    "f2": lambda c: extremal_ranks_f2(*(c[k] for k in COEFFICIENTS["f2"])),
    "f3": lambda c: extremal_ranks_f3(*(c[k] for k in COEFFICIENTS["f3"])),
}


def extremal_report(kind: str, coeffs: Mapping[str, QMatrix]) -> ExtremalReport:
    """Run the extremal-rank computation named by ``kind`` on named coefficients."""
    if kind not in _DISPATCH:
        raise PreconditionViolated(f"Unknown expression kind {kind!r}; expected one of {sorted(_DISPATCH)}")
    missing = [k for k in COEFFICIENTS[kind] if k not in coeffs]
    if missing:
        raise PreconditionViolated(f"Expression {kind} is missing coefficients {missing}")
    report = _DISPATCH[kind](coeffs)
    logger.info(
        "Extremal ranks computed",
        extra={"extra": {"kind": kind, "max_rank": report.max_rank, "min_rank": report.min_rank}},
    )
    return report
