import pytest

from app.core import DimensionMismatch, PreconditionViolated
from app.models import QMatrix, QuintInput
from app.models.qmatrix import bmat, mul_all
from app.services.elimination import rank
from app.services.extremal import (
    evaluate_expression,
    evaluate_p,
    extremal_ranks_f1,
    extremal_ranks_f2,
    extremal_ranks_f3,
    extremal_ranks_p,
    extremal_ranks_p_contained,
    extremal_report,
    min_completion_single_block,
    subspace_contained,
)
from app.services.selftest import random_quint, random_variables
from app.utils.sampling import random_matrix, random_nonsingular, random_qmatrix

from .conftest import qm

ONE = qm([["1"]])
ZERO = QMatrix.zeros(1, 1)


def _quint_dict(q: QuintInput) -> dict[str, QMatrix]:
    return {"A": q.A, "B": q.B, "C": q.C, "D": q.D, "E": q.E}


def test_subspace_contained():
    assert subspace_contained(qm([["1", "i"], ["j", "0"]]), QMatrix.identity(2))
    assert subspace_contained(qm([["i"]]), qm([["j"]]))
    assert not subspace_contained(qm([["i"]]), ZERO)
    with pytest.raises(DimensionMismatch):
        subspace_contained(QMatrix.zeros(2, 1), QMatrix.zeros(1, 1))


def test_min_completion_antidiagonal():
    m, r = min_completion_single_block(ZERO, ONE, ONE)
    assert m == ZERO
    assert r == 2


def test_min_completion_is_minimal(rng):
    a11, a12, a21 = (random_matrix(rng, 2, 2) for _ in range(3))
    m, r = min_completion_single_block(a11, a12, a21)
    assert rank(bmat([[a11, a12], [a21, m]])) == r
    for _ in range(20):
        assert rank(bmat([[a11, a12], [a21, random_qmatrix(rng, 2, 2)]])) >= r


def test_p_without_variable_terms():
    a = qm([["1", "i"], ["j", "k"], ["0", "1"]])
    z = QMatrix.zeros
    q = QuintInput(A=a, B=z(3, 1), C=z(3, 2), D=z(1, 2), E=z(2, 2))
    report = extremal_ranks_p(q)
    assert report.max_rank == report.min_rank == rank(a) == 2


def test_p_all_ones(micro):
    report = extremal_ranks_p(micro["all-ones"])
    assert (report.max_rank, report.min_rank) == (1, 0)
    assert report.max_term == "r[A;D;E]"
    q = micro["all-ones"]
    assert rank(evaluate_p(q, report.min_witness["X"], report.min_witness["Y"])) == 0


def test_p_diagonal_instance():
    q = QuintInput(
        A=QMatrix.identity(2),
        B=qm([["1"], ["0"]]),
        C=QMatrix.zeros(2, 1),
        D=qm([["1", "0"]]),
        E=QMatrix.zeros(1, 2),
    )
    report = extremal_ranks_p(q)
    assert (report.max_rank, report.min_rank) == (2, 1)
    assert report.min_witness["X"] == ONE


def test_p_witnesses_attain_and_sandwich(rng):
    q = random_quint(rng, 3)
    report = extremal_ranks_p(q)
    assert rank(evaluate_p(q, report.max_witness["X"], report.max_witness["Y"])) == report.max_rank
    assert rank(evaluate_p(q, report.min_witness["X"], report.min_witness["Y"])) == report.min_rank
    for _ in range(10):
        v = random_variables(rng, report.max_witness)
        assert report.min_rank <= rank(evaluate_expression("p", _quint_dict(q), v)) <= report.max_rank


def test_p_transform_invariance(rng):
    q = random_quint(rng, 3)
    u, w = random_nonsingular(rng, q.m), random_nonsingular(rng, q.n)
    moved = QuintInput(A=mul_all(u, q.A, w), B=u @ q.B, C=u @ q.C, D=q.D @ w, E=q.E @ w)
    a, b = extremal_ranks_p(q), extremal_ranks_p(moved)
    assert (a.max_rank, a.min_rank) == (b.max_rank, b.min_rank)


def test_p_contained_matches_general(micro, rng):
    q = micro["all-ones"]
    assert (extremal_ranks_p_contained(q).max_rank, extremal_ranks_p_contained(q).min_rank) == (1, 0)

    m, n = rng.randint(1, 3), rng.randint(1, 3)
    c, d = random_matrix(rng, m, 2), random_matrix(rng, 2, n)
    b, e = c @ random_qmatrix(rng, 2, 1), random_qmatrix(rng, 1, 2) @ d
    q = QuintInput(A=random_matrix(rng, m, n), B=b, C=c, D=d, E=e)
    contained, general = extremal_ranks_p_contained(q), extremal_ranks_p(q)
    assert (contained.max_rank, contained.min_rank) == (general.max_rank, general.min_rank)


def test_p_contained_rejects_violations():
    q = QuintInput(A=ONE, B=ONE, C=ZERO, D=ONE, E=ZERO)
    with pytest.raises(PreconditionViolated):
        extremal_ranks_p_contained(q)


def test_f1_examples(matrix):
    report = extremal_ranks_f1(ONE, ONE, ONE)
    assert (report.max_rank, report.min_rank) == (1, 0)

    a = matrix([["0", "1"], ["0", "0"]])
    b = matrix([["1"], ["0"]])
    c = matrix([["0", "1"]])
    report = extremal_ranks_f1(a, b, c)
    assert report.min_rank == 0
    assert rank(evaluate_expression("f1", {"A": a, "B": b, "C": c}, report.min_witness)) == 0


def test_f1_without_variables_is_rank_a():
    a = qm([["1", "i"], ["i", "-1"]])
    report = extremal_ranks_f1(a, QMatrix.zeros(2, 1), QMatrix.zeros(1, 2))
    assert report.max_rank == report.min_rank == 1


def test_f2_reduces_to_f1(rng):
    a, b1, c2 = random_matrix(rng, 2, 3), random_matrix(rng, 2, 1), random_matrix(rng, 2, 3)
    zb, zc = QMatrix.zeros(2, 1), QMatrix.zeros(1, 3)
    f1 = extremal_ranks_f1(a, b1, c2)
    f2 = extremal_ranks_f2(a, b1, c2, zb, zc, zb, zc)
    assert (f2.max_rank, f2.min_rank) == (f1.max_rank, f1.min_rank)
    assert f2.verified


def test_f2_reduces_to_p(rng):
    q = random_quint(rng, 3)
    p = extremal_ranks_p(q)
    f2 = extremal_ranks_f2(q.A, QMatrix.zeros(q.m, 0), QMatrix.zeros(0, q.n), q.B, q.D, q.C, q.E)
    assert (f2.max_rank, f2.min_rank) == (p.max_rank, p.min_rank)


def test_f2_one_by_one():
    report = extremal_ranks_f2(ONE, ONE, ONE, ONE, ONE, ZERO, ZERO)
    assert (report.max_rank, report.min_rank) == (1, 0)
    assert report.verified


def test_f3_all_ones():
    report = extremal_ranks_f3(ONE, ONE, ONE, ONE, ONE, ONE, ONE, ONE, ONE)
    assert (report.max_rank, report.min_rank) == (1, 0)
    assert report.verified


def test_f3_sandwich(rng):
    b2, c1 = QMatrix.identity(2), QMatrix.identity(2)
    bs = [random_matrix(rng, 2, 2) for _ in range(3)]
    cs = [random_matrix(rng, 2, 2) for _ in range(3)]
    a = random_matrix(rng, 2, 2)
    coeffs = {"A": a, "B2": b2, "C1": c1}
    coeffs |= dict(zip(("B1", "B3", "B4"), bs)) | dict(zip(("C2", "C3", "C4"), cs))
    report = extremal_report("f3", coeffs)
    assert report.verified
    for _ in range(10):
        r = rank(evaluate_expression("f3", coeffs, random_variables(rng, report.max_witness)))
        assert report.min_rank <= r <= report.max_rank


def test_f3_rejects_violated_containment():
    with pytest.raises(PreconditionViolated):
        extremal_ranks_f3(ONE, ONE, ZERO, ZERO, ZERO, ONE, ZERO, ZERO, ZERO)


def test_report_dispatch_errors():
    with pytest.raises(PreconditionViolated):
        extremal_report("g", {})
    with pytest.raises(PreconditionViolated):
        extremal_report("p", {"A": ONE})
