import pytest

from app.core import Inconsistent
from app.models import QMatrix, QuintInput
from app.services.elimination import rank
from app.services.equation import (
    general_solution,
    is_consistent,
    min_rank_solution_values,
    min_rank_solution_witness,
    substitution_exact,
)
from app.services.oracle import oracle_solvable
from app.services.selftest import planted_solvable, random_quint
from app.utils.sampling import random_solution

from .conftest import qm

ONE = qm([["1"]])
ZERO = QMatrix.zeros(1, 1)


def test_zero_right_hand_side():
    q = QuintInput(
        A=QMatrix.zeros(2, 2),
        B=qm([["1"], ["i"]]),
        C=QMatrix.zeros(2, 1),
        D=qm([["j", "1"]]),
        E=QMatrix.zeros(1, 2),
    )
    assert is_consistent(q).consistent
    x, y = general_solution(q).particular()
    assert x.is_zero() and y.is_zero()
    assert min_rank_solution_values(q) == (0, 0)


def test_unsolvable_names_failing_equality():
    q = QuintInput(A=ONE, B=ZERO, C=ZERO, D=ZERO, E=ZERO)
    report = is_consistent(q)
    assert not report.consistent
    assert report.failing.name == "r[A C B] = r[C B]"
    with pytest.raises(Inconsistent) as exc:
        general_solution(q)
    assert exc.value.failing == "r[A C B] = r[C B]"


def test_ijk_instance(micro):
    q = micro["ijk"]
    assert is_consistent(q).consistent
    x, y = general_solution(q).particular()
    assert x == ONE
    assert substitution_exact(q, x, y)


def test_all_ones_family(micro, rng):
    q = micro["all-ones"]
    family = general_solution(q)
    for _ in range(3):
        x, y = random_solution(rng, family)
        assert x + y == ONE


def test_min_rank_values(micro):
    assert min_rank_solution_values(micro["forced-x"]) == (1, 0)
    assert min_rank_solution_values(micro["all-ones"]) == (0, 0)


def test_min_rank_witnesses(micro):
    x, y = min_rank_solution_witness(micro["forced-x"], "X")
    assert x == ONE

    x, y = min_rank_solution_witness(micro["all-ones"], "X")
    assert (x, y) == (ZERO, ONE)

    x, y = min_rank_solution_witness(micro["all-ones"], "Y")
    assert (x, y) == (ONE, ZERO)


def test_planted_instances(rng):
    q = planted_solvable(rng, 3)
    assert is_consistent(q).consistent
    family = general_solution(q)
    min_x, min_y = min_rank_solution_values(q)
    for _ in range(5):
        x, y = random_solution(rng, family)
        assert substitution_exact(q, x, y)
        assert rank(x) >= min_x and rank(y) >= min_y

    x, y = min_rank_solution_witness(q, "X")
    assert substitution_exact(q, x, y) and rank(x) == min_x
    x, y = min_rank_solution_witness(q, "Y")
    assert substitution_exact(q, x, y) and rank(y) == min_y


def test_rank_test_agrees_with_oracle(rng):
    q = random_quint(rng, 2)
    assert is_consistent(q).consistent == oracle_solvable(q)
