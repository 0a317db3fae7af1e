import pytest

from app.models.qmatrix import QMatrix, ctranspose, mul_all
from app.services.elimination import (
    canonical_reduce,
    compress_cols,
    compress_rows,
    diag_identity,
    inner_inverse,
    rank,
)
from app.utils.sampling import random_dims, random_matrix, random_nonsingular

from .conftest import qm


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([["0"]], 0),
        ([["i"]], 1),
        ([["1", "i"], ["j", "k"]], 2),
        # second row is i times the first from the left
        ([["1", "j"], ["i", "k"]], 1),
        ([["1", "i", "0"], ["0", "0", "0"]], 1),
    ],
)
def test_rank_examples(rows, expected):
    assert rank(qm(rows)) == expected


def test_rank_of_empty():
    assert rank(QMatrix.zeros(0, 3)) == 0
    assert rank(QMatrix.zeros(3, 0)) == 0


def test_canonical_reduce_identities(rng):
    m, n = random_dims(rng, 4, 2)
    a = random_matrix(rng, m, n)
    red = canonical_reduce(a)
    assert (red.P @ red.P_inv).is_identity()
    assert (red.Q @ red.Q_inv).is_identity()
    assert mul_all(red.P, a, red.Q) == diag_identity(m, n, red.rank)
    assert red.rank == rank(a)


def test_compressions(rng):
    m, n = random_dims(rng, 4, 2)
    a = random_matrix(rng, m, n)
    rows = compress_rows(a)
    top = rows.T @ a
    assert top.submatrix(rows.rank, m, 0, n).is_zero()
    assert rank(top.submatrix(0, rows.rank, 0, n)) == rows.rank

    cols = compress_cols(a)
    left = a @ cols.T
    assert left.submatrix(0, m, cols.rank, n).is_zero()
    assert (cols.T @ cols.T_inv).is_identity()


def test_inner_inverse(rng):
    m, n = random_dims(rng, 4, 2)
    a = random_matrix(rng, m, n)
    g = inner_inverse(a)
    assert g.shape == (n, m)
    assert mul_all(a, g, a) == a


def test_rank_invariant_under_nonsingular_factors(rng):
    m, n = random_dims(rng, 4, 2)
    a = random_matrix(rng, m, n)
    p, q = random_nonsingular(rng, m), random_nonsingular(rng, n)
    assert rank(mul_all(p, a, q)) == rank(a)


def test_rank_of_conjugate_transpose(rng):
    m, n = random_dims(rng, 4, 2)
    a = random_matrix(rng, m, n)
    assert rank(ctranspose(a)) == rank(a)
