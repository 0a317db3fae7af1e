"""Seeded randomized self-test of the decomposition, extremal-rank and solver services.

Each suite draws its instances from ``case_rng(seed, suite, index)`` so a
single case can be replayed from its seed and index alone.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from app.core import BaseAppException, get_logger, settings
from app.models.domain import ExtremalReport, QuintInput
from app.models.qmatrix import QMatrix, mul_all
from app.models.quaternion import parse_quaternion
from app.services.elimination import rank
from app.services.equation import (
    general_solution,
    is_consistent,
    min_rank_solution_values,
    min_rank_solution_witness,
    substitution_exact,
)
from app.services.extremal import (
    evaluate_expression,
    extremal_ranks_f1,
    extremal_ranks_f2,
    extremal_ranks_f3,
    extremal_ranks_p,
    extremal_ranks_p_contained,
)
from app.services.oracle import oracle_rank, oracle_solvable
from app.services.simdecomp import simultaneous_decompose, verify_decomposition
from app.utils.sampling import case_rng, random_dims, random_matrix, random_qmatrix, random_solution

logger = get_logger(__name__)


@dataclass(frozen=True)
class SelftestConfig:
    cases: int = settings.SELFTEST_CASES
    max_dim: int = settings.SELFTEST_MAX_DIM
    seed: int = settings.SELFTEST_SEED
    samples: int = settings.SAMPLES_PER_INSTANCE
    members: int = settings.SOLUTION_MEMBERS

    def __post_init__(self) -> None:
        if self.max_dim < 0 or self.cases < 0:
            raise ValueError("cases and max_dim must be non-negative")


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


# --------------------------------------------------------------------------
# instance generators
# --------------------------------------------------------------------------


def random_quint(rng: random.Random, max_dim: int) -> QuintInput:
    m, n, p1, p2, q1, q2 = random_dims(rng, max_dim, 6)
    return QuintInput(
        A=random_matrix(rng, m, n),
        B=random_matrix(rng, m, p1),
        C=random_matrix(rng, m, p2),
        D=random_matrix(rng, q1, n),
        E=random_matrix(rng, q2, n),
    )


def planted_solvable(rng: random.Random, max_dim: int) -> QuintInput:
    """A quintuple whose right-hand side is B X D + C Y E for random X, Y."""
    q = random_quint(rng, max_dim)
    x = random_qmatrix(rng, q.p1, q.q1)
    y = random_qmatrix(rng, q.p2, q.q2)
    a = mul_all(q.B, x, q.D) + mul_all(q.C, y, q.E)
    return QuintInput(A=a, B=q.B, C=q.C, D=q.D, E=q.E)


def random_variables(rng: random.Random, like: dict[str, QMatrix]) -> dict[str, QMatrix]:
    return {name: random_qmatrix(rng, x.rows, x.cols) for name, x in like.items()}


def micro_instances() -> dict[str, QuintInput]:
    """The three hand-checked 1x1 instances."""
    one = QMatrix.from_rows([[1]])
    zero = QMatrix.zeros(1, 1)
    return {
        "ijk": QuintInput(
            A=QMatrix.from_rows([[parse_quaternion("k")]]),
            B=QMatrix.from_rows([[parse_quaternion("i")]]),
            C=zero,
            D=QMatrix.from_rows([[parse_quaternion("j")]]),
            E=zero,
        ),
        "all-ones": QuintInput(A=one, B=one, C=one, D=one, E=one),
        "forced-x": QuintInput(A=one, B=one, C=zero, D=one, E=zero),
    }


# --------------------------------------------------------------------------
# suites: each case returns a list of failure descriptions
# --------------------------------------------------------------------------

Case = Callable[[random.Random, SelftestConfig], list[str]]


def _decomposition_case(rng: random.Random, cfg: SelftestConfig) -> list[str]:
    q = random_quint(rng, cfg.max_dim)
    report = verify_decomposition(q, simultaneous_decompose(q))
    return [c.name for c in report.failures()]


def _rank_oracle_case(rng: random.Random, cfg: SelftestConfig) -> list[str]:
    rows, cols = random_dims(rng, cfg.max_dim + 2, 2)
    a = random_matrix(rng, rows, cols)
    r, o = rank(a), oracle_rank(a)
    return [] if r == o else [f"rank {r} != oracle {o} on {rows}x{cols}"]


def _sandwich(
    kind: str, coeffs: dict[str, QMatrix], report: ExtremalReport, rng: random.Random, samples: int
) -> list[str]:
    out = []
    for _ in range(samples):
        r = rank(evaluate_expression(kind, coeffs, random_variables(rng, report.max_witness)))
        if not report.min_rank <= r <= report.max_rank:
            out.append(f"{kind}: sampled rank {r} outside [{report.min_rank}, {report.max_rank}]")
            break
    return out


def _extremal_p_case(rng: random.Random, cfg: SelftestConfig) -> list[str]:
    q = random_quint(rng, cfg.max_dim)
    report = extremal_ranks_p(q)
    coeffs = {"A": q.A, "B": q.B, "C": q.C, "D": q.D, "E": q.E}
    return _sandwich("p", coeffs, report, rng, cfg.samples)


def _coherence_case(rng: random.Random, cfg: SelftestConfig) -> list[str]:
    failures: list[str] = []
    k = cfg.max_dim

    # f2 without two-sided terms is f1
    m, n, k1, l2, k3, l3 = random_dims(rng, k, 6)
    a, b1, c2 = random_matrix(rng, m, n), random_matrix(rng, m, k1), random_matrix(rng, l2, n)
    zb, zc = QMatrix.zeros(m, k3), QMatrix.zeros(l3, n)
    f1 = extremal_ranks_f1(a, b1, c2)
    f2 = extremal_ranks_f2(a, b1, c2, zb, zc, zb, zc)
    if (f1.max_rank, f1.min_rank) != (f2.max_rank, f2.min_rank):
        failures.append(f"f2 {f2.max_rank, f2.min_rank} != f1 {f1.max_rank, f1.min_rank}")

    # containment-restricted p agrees with the general formulas
    m, n, p2, q1, p1, q2 = random_dims(rng, k, 6)
    c, d = random_matrix(rng, m, p2), random_matrix(rng, q1, n)
    q = QuintInput(
        A=random_matrix(rng, m, n),
        B=c @ random_qmatrix(rng, p2, p1),
        C=c,
        D=d,
        E=random_qmatrix(rng, q2, q1) @ d,
    )
    pc, p = extremal_ranks_p_contained(q), extremal_ranks_p(q)
    if (pc.max_rank, pc.min_rank) != (p.max_rank, p.min_rank):
        failures.append(f"p_contained {pc.max_rank, pc.min_rank} != p {p.max_rank, p.min_rank}")

    # f3 under its containments
    m, n, w2, h1 = random_dims(rng, k, 4)
    b2, c1 = random_matrix(rng, m, w2), random_matrix(rng, h1, n)
    bs = [b2 @ random_qmatrix(rng, w2, rng.randint(0, k)) for _ in range(3)]
    cs = [random_qmatrix(rng, rng.randint(0, k), h1) @ c1 for _ in range(3)]
    a = random_matrix(rng, m, n)
    f3 = extremal_ranks_f3(a, bs[0], b2, bs[1], bs[2], c1, cs[0], cs[1], cs[2])
    if not f3.verified:
        failures.append("f3 staged witness misses its formula value")
    coeffs = {"A": a, "B2": b2, "C1": c1}
    coeffs |= dict(zip(("B1", "B3", "B4"), bs)) | dict(zip(("C2", "C3", "C4"), cs))
    failures += _sandwich("f3", coeffs, f3, rng, max(1, cfg.samples // 5))
    return failures


def _solvability_case(rng: random.Random, cfg: SelftestConfig) -> list[str]:
    planted = rng.random() < 0.5
    q = planted_solvable(rng, cfg.max_dim) if planted else random_quint(rng, cfg.max_dim)
    consistent = is_consistent(q).consistent
    failures = []
    if consistent != oracle_solvable(q):
        failures.append(f"rank test says {consistent}, oracle disagrees")
    if planted and not consistent:
        failures.append("planted instance reported unsolvable")
    if consistent:
        family = general_solution(q)
        for _ in range(cfg.members):
            x, y = random_solution(rng, family)
            if not substitution_exact(q, x, y):
                failures.append("general-solution member fails substitution")
                break
    return failures


def _min_rank_case(rng: random.Random, cfg: SelftestConfig) -> list[str]:
    q = planted_solvable(rng, cfg.max_dim)
    min_x, min_y = min_rank_solution_values(q)
    failures = []
    for which, target in (("X", min_x), ("Y", min_y)):
        x, y = min_rank_solution_witness(q, which)  # type: ignore[arg-type]
        got = rank(x if which == "X" else y)
        if not substitution_exact(q, x, y):
            failures.append(f"min-rank {which} witness fails substitution")
        if got != target:
            failures.append(f"min-rank {which} witness has rank {got}, expected {target}")
    family = general_solution(q)
    for _ in range(cfg.samples):
        x, y = random_solution(rng, family)
        if rank(x) < min_x or rank(y) < min_y:
            failures.append("sampled solution undercuts a minimal rank")
            break
    return failures


def _micro_case(rng: random.Random, cfg: SelftestConfig) -> list[str]:
    inst = micro_instances()
    failures = []

    solution = general_solution(inst["ijk"]).particular()
    if solution[0] != QMatrix.from_rows([[1]]):
        failures.append(f"ijk: expected X = [1], got {solution[0]!r}")

    p = extremal_ranks_p(inst["all-ones"])
    if (p.max_rank, p.min_rank) != (1, 0):
        failures.append(f"all-ones: expected (1, 0), got {p.max_rank, p.min_rank}")

    values = min_rank_solution_values(inst["forced-x"])
    if values != (1, 0):
        failures.append(f"forced-x: expected minimal ranks (1, 0), got {values}")
    return failures


SUITES: dict[str, Case] = {
    "decomposition": _decomposition_case,
    "rank-oracle": _rank_oracle_case,
    "extremal-p": _extremal_p_case,
    "coherence": _coherence_case,
    "solvability": _solvability_case,
    "min-rank": _min_rank_case,
    "micro-instances": _micro_case,
}


# cases per suite relative to --cases; --cases 200 gives 500 rank checks and 100 coherence/min-rank cases
SUITE_WEIGHTS: dict[str, Fraction] = {
    "decomposition": Fraction(1),
    "rank-oracle": Fraction(5, 2),
    "extremal-p": Fraction(1),
    "coherence": Fraction(1, 2),
    "solvability": Fraction(1),
    "min-rank": Fraction(1, 2),
}


def suite_case_count(name: str, cases: int) -> int:
    """Cases run by suite ``name`` for a ``--cases`` value. The micro instances run once."""
    if name == "micro-instances":
        return 1
    if cases == 0:
        return 0
    return max(1, round(cases * SUITE_WEIGHTS[name]))


def run_suite(name: str, cfg: SelftestConfig) -> SuiteResult:
    result = SuiteResult(name)
    case = SUITES[name]
    count = suite_case_count(name, cfg.cases)
    for index in range(count):
        rng = case_rng(cfg.seed, name, index)
        result.cases += 1
        try:
            problems = case(rng, cfg)
        except BaseAppException as e:
            problems = [f"{type(e).__name__}: {e}"]
        for problem in problems:
            result.failures.append(f"case {index}: {problem}")
    level = 20 if result.passed else 40
    logger.log(
        level,
        f"Suite {name} finished",
        extra={"extra": {"suite": name, "cases": result.cases, "failures": len(result.failures)}},
    )
    return result


def run_selftest(cfg: SelftestConfig, suites: list[str] | None = None) -> list[SuiteResult]:
    return [run_suite(name, cfg) for name in (suites or list(SUITES))]
