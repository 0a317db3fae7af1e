"""Seeded generators of small rational quaternion matrices."""

import random
from fractions import Fraction

from app.models.domain import GeneralSolution
from app.models.qmatrix import QMatrix, matmul
from app.models.quaternion import ONE, ZERO, Quaternion

NUMERATORS = (-2, -1, 0, 1, 2)
DENOMINATORS = (1, 2, 3)


def case_rng(seed: int, suite: str, index: int) -> random.Random:
    """Independent generator per (master seed, suite, case index)."""
    return random.Random(f"{seed}:{suite}:{index}")


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(NUMERATORS), rng.choice(DENOMINATORS))


def random_quaternion(rng: random.Random, density: float = 0.75) -> Quaternion:
    if rng.random() >= density:
        return ZERO
    return Quaternion(*(random_rational(rng) for _ in range(4)))


def random_qmatrix(rng: random.Random, rows: int, cols: int, density: float = 0.75) -> QMatrix:
    return QMatrix(rows, cols, [random_quaternion(rng, density) for _ in range(rows * cols)])


def random_low_rank(rng: random.Random, rows: int, cols: int, rank: int) -> QMatrix:
    """Product of thin random factors; its rank is at most ``rank``."""
    rank = max(0, min(rank, rows, cols))
    return matmul(random_qmatrix(rng, rows, rank, 1.0), random_qmatrix(rng, rank, cols, 1.0))


def random_matrix(rng: random.Random, rows: int, cols: int) -> QMatrix:
    """Either a dense random matrix or a planted low-rank one."""
    roll = rng.random()
    if roll < 0.15:
        return QMatrix.zeros(rows, cols)
    if roll < 0.55 and min(rows, cols) > 0:
        return random_low_rank(rng, rows, cols, rng.randint(0, min(rows, cols)))
    return random_qmatrix(rng, rows, cols)


def random_nonsingular(rng: random.Random, n: int, ops: int | None = None) -> QMatrix:
    """Product of random elementary row operations, so always invertible."""
    m = QMatrix.identity(n)
    if n == 0:
        return m
    rows = m.to_rows()
    for _ in range(ops if ops is not None else 3 * n):
        kind = rng.random()
        i = rng.randrange(n)
        if kind < 0.3 and n > 1:
            j = rng.randrange(n)
            rows[i], rows[j] = rows[j], rows[i]
        elif kind < 0.5:
            s = random_quaternion(rng, 1.0)
            if s.is_zero():
                s = ONE
            rows[i] = [s * x for x in rows[i]]
        elif n > 1:
            j = (i + 1 + rng.randrange(n - 1)) % n
            c = random_quaternion(rng, 1.0)
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return QMatrix.from_rows(rows, cols=n)


def random_dims(rng: random.Random, max_dim: int, count: int) -> list[int]:
    return [rng.randint(0, max_dim) for _ in range(count)]


def random_solution(rng: random.Random, family: GeneralSolution) -> tuple[QMatrix, QMatrix]:
    """A member of ``family`` with every free block drawn from ``rng``."""
    free = {name: random_qmatrix(rng, r, c) for name, (r, c) in family.free_shapes().items()}
    return family.member(free)
