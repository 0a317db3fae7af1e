import pytest

from app.models import QMatrix, QuintInput
from app.services.elimination import rank
from app.services.equation import substitution_exact
from app.services.oracle import oracle_rank, oracle_solvable, oracle_solve, real_system
from app.services.selftest import planted_solvable
from app.utils.sampling import random_qmatrix

from .conftest import qm


@pytest.mark.parametrize(
    "rows,expected",
    [
        ([["0"]], 0),
        ([["i"]], 1),
        ([["1", "i"], ["j", "k"]], 2),
        ([["1", "i"], ["j", "-k"]], 1),
    ],
)
def test_oracle_rank_examples(rows, expected):
    assert oracle_rank(qm(rows)) == expected


def test_oracle_rank_empty():
    assert oracle_rank(QMatrix.zeros(0, 3)) == 0
    assert oracle_rank(QMatrix.zeros(2, 0)) == 0


def test_oracle_rank_agrees_with_elimination(rng):
    a = random_qmatrix(rng, rng.randint(1, 4), rng.randint(1, 4))
    assert oracle_rank(a) == rank(a)


def test_real_system_size(micro):
    system = real_system(micro["all-ones"])
    # one equation per real component of A, one unknown per real component of X and Y
    assert len(system.matrix) == 4
    assert system.unknowns == 8


def test_oracle_solvability(micro):
    one = qm([["1"]])
    zero = QMatrix.zeros(1, 1)
    assert not oracle_solvable(QuintInput(A=one, B=zero, C=zero, D=zero, E=zero))
    assert oracle_solvable(micro["ijk"])
    assert oracle_solve(QuintInput(A=one, B=zero, C=zero, D=zero, E=zero)) is None


def test_oracle_solve_ijk(micro):
    x, y = oracle_solve(micro["ijk"])
    assert x == qm([["1"]])
    assert substitution_exact(micro["ijk"], x, y)


def test_oracle_solve_planted(rng):
    q = planted_solvable(rng, 2)
    solution = oracle_solve(q)
    assert solution is not None
    assert substitution_exact(q, *solution)
