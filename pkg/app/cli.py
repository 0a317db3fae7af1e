"""Command-line front end.

Exit status: 0 on success, 1 on verification or consistency failure,
2 on usage and parse errors. Results go to stdout; logs go to stderr.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from app.core import BaseAppException, ParseError, VerificationFailed, get_logger, settings, setup_logging
from app.models.api import parse_matrix_document
from app.models.domain import ExtremalReport, QuintInput
from app.models.qmatrix import QMatrix
from app.services.elimination import rank
from app.services.equation import (
    general_solution,
    is_consistent,
    min_rank_solution_values,
    min_rank_solution_witness,
    substitution_exact,
)
from app.services.extremal import COEFFICIENTS, extremal_report
from app.services.oracle import oracle_rank
from app.services.selftest import SUITES, SelftestConfig, run_selftest
from app.services.simdecomp import decomposition_document, simultaneous_decompose, verify_decomposition
from app.utils.reporting import (
    dumps,
    matrix_json,
    render_matrix,
    render_named_matrices,
    render_table,
    save_json,
)

logger = get_logger(__name__)

QUINT = ("A", "B", "C", "D", "E")


def load_matrix(path: str | Path) -> QMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror}") from e
    try:
        return parse_matrix_document(text)
    except ParseError as e:
        raise ParseError(f"{path}: {e}") from e


def _flag(name: str) -> str:
    return "--" + name.lower()


def _load_named(args: argparse.Namespace, names: tuple[str, ...]) -> dict[str, QMatrix]:
    missing = [_flag(n) for n in names if getattr(args, n.lower()) is None]
    if missing:
        raise ParseError(f"Missing coefficient files: {', '.join(missing)}")
    return {n: load_matrix(getattr(args, n.lower())) for n in names}


def _load_quint(args: argparse.Namespace) -> QuintInput:
    m = _load_named(args, QUINT)
    return QuintInput(A=m["A"], B=m["B"], C=m["C"], D=m["D"], E=m["E"])


def _emit(args: argparse.Namespace, data: dict[str, Any], table: Callable[[], str]) -> None:
    print(dumps(data) if args.format == "json" else table())


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_rank(args: argparse.Namespace) -> int:
    a = load_matrix(args.file)
    r = rank(a)
    data = {"rank": r, "oracle_rank": oracle_rank(a)}
    _emit(args, data, lambda: str(r))
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    q = _load_quint(args)
    dec = simultaneous_decompose(q)
    report = verify_decomposition(q, dec)
    if not report.passed:
        failed = ", ".join(c.name for c in report.failures())
        raise VerificationFailed(f"Decomposition failed verification ({failed}); nothing written")

    document = decomposition_document(dec, report)
    if args.out:
        save_json(document, Path(args.out) / "decomposition.json")

    def table() -> str:
        parts = [render_table([(k, v) for k, v in dec.dims.as_dict().items()])]
        parts.append(render_table([("r(A3)", dec.rank_a3), ("r(A7)", dec.rank_a7)]))
        parts.append(render_named_matrices("transforms:", {k: t for k, (t, _) in dec.transforms().items()}))
        parts.append(render_named_matrices("factors:", dec.factors()))
        parts.append(f"verification: {len(report.checks)} checks passed")
        return "\n\n".join(parts)

    _emit(args, document, table)
    return 0


def _extremal_data(report: ExtremalReport) -> dict[str, Any]:
    return {
        "kind": report.kind,
        "max_rank": report.max_rank,
        "min_rank": report.min_rank,
        "max_term": report.max_term,
        "verified": report.verified,
        "max_witness": {k: matrix_json(v) for k, v in report.max_witness.items()},
        "min_witness": {k: matrix_json(v) for k, v in report.min_witness.items()},
    }


def cmd_extremal(args: argparse.Namespace) -> int:
    coeffs = _load_named(args, COEFFICIENTS[args.kind])
    report = extremal_report(args.kind, coeffs)
    data = _extremal_data(report)
    if args.out:
        save_json(data, Path(args.out) / f"extremal_{args.kind}.json")

    def table() -> str:
        rows = [
            ("expression", report.kind),
            ("max rank", report.max_rank),
            ("min rank", report.min_rank),
            ("max attained by", report.max_term),
            ("witnesses verified", "yes" if report.verified else "NO"),
        ]
        return "\n\n".join(
            [
                render_table(rows),
                render_named_matrices("max witness:", report.max_witness),
                render_named_matrices("min witness:", report.min_witness),
            ]
        )

    _emit(args, data, table)
    return 0 if report.verified else 1


def cmd_solve(args: argparse.Namespace) -> int:
    q = _load_quint(args)
    consistency = is_consistent(q)
    report: dict[str, Any] = {
        "consistent": consistency.consistent,
        "equalities": [
            {"name": eq.name, "lhs": eq.lhs, "rhs": eq.rhs, "holds": eq.holds}
            for eq in consistency.equalities
        ],
        "mode": args.mode,
    }
    out = Path(args.out) if args.out else None

    if not consistency.consistent:
        failing = consistency.failing
        assert failing is not None
        report["failing"] = failing.name
        if out:
            save_json(report, out / "report.json")
        logger.warning("Equation is inconsistent", extra={"extra": {"failing": failing.name}})
        _emit(args, report, lambda: f"inconsistent: {failing.name} fails ({failing.lhs} != {failing.rhs})")
        return 1

    if args.mode == "particular":
        x, y = general_solution(q).particular()
    else:
        x, y = min_rank_solution_witness(q, "X" if args.mode == "min-rank-x" else "Y")
    min_x, min_y = min_rank_solution_values(q)
    exact = substitution_exact(q, x, y)
    report.update(
        rank_X=rank(x),
        rank_Y=rank(y),
        min_rank_X=min_x,
        min_rank_Y=min_y,
        substitution="exact" if exact else "failed",
    )
    if out:
        save_json(matrix_json(x), out / "X.json")
        save_json(matrix_json(y), out / "Y.json")
        save_json(report, out / "report.json")

    def table() -> str:
        rows = [(eq["name"], "holds" if eq["holds"] else "fails") for eq in report["equalities"]]
        rows += [
            ("rank X / min", f"{report['rank_X']} / {min_x}"),
            ("rank Y / min", f"{report['rank_Y']} / {min_y}"),
            ("substitution", report["substitution"]),
        ]
        return "\n".join([render_table(rows), "X:", render_matrix(x), "Y:", render_matrix(y)])

    _emit(args, report | {"X": matrix_json(x), "Y": matrix_json(y)}, table)
    return 0 if exact else 1


def cmd_selftest(args: argparse.Namespace) -> int:
    cfg = SelftestConfig(cases=args.cases, max_dim=args.max_dim, seed=args.seed, samples=args.samples)
    results = run_selftest(cfg, args.suite)
    data = {
        "seed": cfg.seed,
        "cases": cfg.cases,
        "max_dim": cfg.max_dim,
        "suites": [{"name": r.name, "cases": r.cases, "failures": r.failures} for r in results],
        "passed": all(r.passed for r in results),
    }

    def table() -> str:
        rows = [(r.name, f"{r.cases} cases, {len(r.failures)} failures") for r in results]
        detail = [f"  {r.name}: {f}" for r in results for f in r.failures]
        verdict = "PASS" if data["passed"] else "FAIL"
        return "\n".join([render_table(rows), *detail, verdict])

    _emit(args, data, table)
    return 0 if data["passed"] else 1


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def _add_coefficient_flags(parser: argparse.ArgumentParser, names: tuple[str, ...]) -> None:
    for name in names:
        parser.add_argument(_flag(name), metavar=f"{name}.json", help=f"Matrix document for {name}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatrank", description="Exact quaternion matrix toolkit")
    parser.add_argument("--format", choices=("table", "json"), default="table", help="Output format")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="Rank of a quaternion matrix")
    p.add_argument("file", help="Matrix document")
    p.set_defaults(handler=cmd_rank)

    p = sub.add_parser("decompose", help="Simultaneous decomposition of (A, B, C, D, E)")
    _add_coefficient_flags(p, QUINT)
    p.add_argument("--out", help="Directory for decomposition.json")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("extremal", help="Maximal and minimal ranks of p, f1, f2 or f3")
    p.add_argument("kind", choices=tuple(COEFFICIENTS))
    every = sorted({n for names in COEFFICIENTS.values() for n in names})
    _add_coefficient_flags(p, tuple(every))
    p.add_argument("--out", help="Directory for the report")
    p.set_defaults(handler=cmd_extremal)

    p = sub.add_parser("solve", help="Solve B X D + C Y E = A")
    _add_coefficient_flags(p, QUINT)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--particular", dest="mode", action="store_const", const="particular")
    mode.add_argument("--min-rank-x", dest="mode", action="store_const", const="min-rank-x")
    mode.add_argument("--min-rank-y", dest="mode", action="store_const", const="min-rank-y")
    p.set_defaults(mode="particular")
    p.add_argument("--out", help="Directory for X.json, Y.json and report.json")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("selftest", help="Seeded randomized self-test")
    p.add_argument("--cases", type=int, default=settings.SELFTEST_CASES)
    p.add_argument("--max-dim", type=int, default=settings.SELFTEST_MAX_DIM)
    p.add_argument("--seed", type=int, default=settings.SELFTEST_SEED)
    p.add_argument("--samples", type=int, default=settings.SAMPLES_PER_INSTANCE)
    p.add_argument("--suite", action="append", choices=tuple(SUITES), help="Run only this suite (repeatable)")
    p.set_defaults(handler=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_dim", 0) < 0 or getattr(args, "cases", 0) < 0:
        parser.error("--cases and --max-dim must be non-negative")

    level = logging.DEBUG if (args.verbose or settings.DEBUG) else logging.WARNING
    setup_logging(level=level, json_lines=settings.LOG_JSON)

    try:
        return args.handler(args)
    except BaseAppException as e:
        logger.error(f"{args.command} failed: {e}", extra={"extra": {"error": type(e).__name__}})
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
