"""Solvability, general solution and minimal-rank solutions of B X D + C Y E = A."""

from typing import Literal

from app.core import Inconsistent, InternalInconsistency, get_logger
from app.models.domain import ConsistencyReport, GeneralSolution, QuintInput, RankEquality, SimDecomposition
from app.models.qmatrix import QMatrix, assemble, mul_all
from app.services.extremal import min_completion_single_block
from app.services.simdecomp import bordered_rank, simultaneous_decompose

logger = get_logger(__name__)


def is_consistent(q: QuintInput) -> ConsistencyReport:
    """The four rank equalities that together decide solvability."""
    A, B, C, D, E = q.A, q.B, q.C, q.D, q.E
    zero_a = QMatrix.zeros(q.m, q.n)
    equalities = [
        RankEquality("r[A C B] = r[C B]", bordered_rank([[A, C, B]]), bordered_rank([[C, B]])),
        RankEquality("r[A;D;E] = r[D;E]", bordered_rank([[A], [D], [E]]), bordered_rank([[D], [E]])),
        RankEquality(
            "r[A B;E 0] = r[0 B;E 0]",
            bordered_rank([[A, B], [E, None]]),
            bordered_rank([[zero_a, B], [E, None]]),
        ),
        RankEquality(
            "r[A C;D 0] = r[0 C;D 0]",
            bordered_rank([[A, C], [D, None]]),
            bordered_rank([[zero_a, C], [D, None]]),
        ),
    ]
    report = ConsistencyReport(equalities)
    logger.debug(
        "is_consistent",
        extra={"extra": {eq.name: [eq.lhs, eq.rhs] for eq in equalities} | {"consistent": report.consistent}},
    )
    return report


def _require_consistent(q: QuintInput) -> ConsistencyReport:
    report = is_consistent(q)
    failing = report.failing
    if failing is not None:
        raise Inconsistent(
            f"B X D + C Y E = A has no solution: {failing.name} fails ({failing.lhs} != {failing.rhs})",
            failing=failing.name,
        )
    return report


def _consistent_decomposition(q: QuintInput) -> SimDecomposition:
    """Decomposition of a solvable quintuple, with the blocks solvability forces to vanish checked."""
    dec = simultaneous_decompose(q)
    d = dec.dims
    if d.m1 or d.m5 or d.m6:
        raise InternalInconsistency(f"Solvable input left m1={d.m1}, m5={d.m5}, m6={d.m6}")
    for name in ("A3", "A7", "B1", "D1"):
        if not dec.core[name].is_zero():
            raise InternalInconsistency(f"Solvable input left a nonzero {name} block")
    return dec


def general_solution(q: QuintInput) -> GeneralSolution:
    """Every solution, parametrised by the free blocks of X^ and Y^.

    Raises:
        Inconsistent: If the equation has no solution
    """
    _require_consistent(q)
    return GeneralSolution(_consistent_decomposition(q))


def min_rank_solution_values(q: QuintInput) -> tuple[int, int]:
    """Smallest rank of X and of Y over all solutions."""
    _require_consistent(q)
    A, B, C, D, E = q.A, q.B, q.C, q.D, q.E
    min_x = bordered_rank([[A, C]]) + bordered_rank([[A], [E]]) - bordered_rank([[A, C], [E, None]])
    min_y = bordered_rank([[A, B]]) + bordered_rank([[A], [D]]) - bordered_rank([[A, B], [D, None]])
    return min_x, min_y


def min_rank_solution_witness(q: QuintInput, which: Literal["X", "Y"]) -> tuple[QMatrix, QMatrix]:
    """A solution whose X (or Y) has the smallest possible rank.

    For X the free blocks of X^ are zero except X5 = A4 A1^- A2; for Y the
    free blocks of Y^ are zero except the coupled block A5 - X5 = A6 A9^- A8.
    """
    _require_consistent(q)
    dec = _consistent_decomposition(q)
    core = dec.core
    d = dec.dims
    o = None
    if which == "X":
        x5, _ = min_completion_single_block(core["A1"], core["A2"], core["A4"])
    else:
        y5, _ = min_completion_single_block(core["A9"], core["A8"], core["A6"])
        x5 = core["A5"] - y5

    x_hat = assemble(
        d.spec_x(),
        [[core["A1"], core["A2"], o], [core["A4"], x5, o], [o, o, o]],
    )
    y_hat = assemble(
        d.spec_y(),
        [[o, o, o], [o, core["A5"] - x5, core["A6"]], [o, core["A8"], core["A9"]]],
    )
    x = mul_all(dec.T1_inv, x_hat, dec.V1_inv)
    y = mul_all(dec.T2_inv, y_hat, dec.V2_inv)
    return x, y


def substitution_exact(q: QuintInput, x: QMatrix, y: QMatrix) -> bool:
    return mul_all(q.B, x, q.D) + mul_all(q.C, y, q.E) == q.A
