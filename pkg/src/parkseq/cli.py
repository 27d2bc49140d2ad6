"""Command-line front end: park, count, verify, table.

Every subcommand speaks three formats: ``plain`` human lines, ``tsv`` with a
header row, and ``json`` with one flat record per line.  Exit codes: 0 for
success / all rows match, 1 for a failed parking attempt or a verification
mismatch, 2 for malformed input or an exceeded enumeration budget.  Output
bytes are a pure function of the flags (including ``--seed``).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from dataclasses import dataclass
from itertools import combinations, cycle, islice, product
from typing import Iterable, Iterator

from .core import Collision, Parked, simulate_parking
from .counting import (
    DEFAULT_BUDGET,
    EnumerationBudgetError,
    IndexSet,
    count_by_formula,
    count_report,
    verify_recurrence,
)
from .poly import ParameterAssignment, SparsePolynomial
from .strehl import (
    SYMBOLIC_BUDGET,
    f_as_t_specialization,
    identity_sides,
    identity_value_sides,
    random_identity_check,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

FORMATS = ("plain", "json", "tsv")
SUITES = ("recurrence", "easy", "sheffer", "binomial", "specialization", "all")
FAMILIES = ("ones", "const", "pattern")

PARK_COLUMNS = ("sizes", "z", "prefs", "outcome", "layout", "car", "first_empty", "blocked_at")
COUNT_COLUMNS = ("sizes", "z", "formula", "enumerated", "match", "tuples_scanned")
VERIFY_COLUMNS = ("suite", "instance", "lhs", "rhs", "match")
TABLE_COLUMNS = ("n", "z", "count")


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs for one invocation."""

    subcommand: str
    fmt: str = "plain"
    sizes: tuple[int, ...] = ()
    z: int = 1
    prefs: tuple[int, ...] = ()
    do_enumerate: bool = False
    budget: int = DEFAULT_BUDGET
    force: bool = False
    workers: int = 1
    suite: str = "all"
    ground: tuple[int, ...] | None = None
    randomized: bool = False
    n_max: int = 3
    y_max: int = 3
    z_max: int = 4
    trials: int = 20
    seed: int = 42
    family: str = "ones"
    car: int = 2
    pattern: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


def _csv_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _csv(values: Iterable[object]) -> str:
    return ",".join(str(v) for v in values)


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (tuple, list)):
        return _csv(value)
    return str(value)


def _emit(cfg: RunConfig, records: list[dict], plain_lines: list[str], columns: tuple[str, ...]) -> None:
    if cfg.fmt == "plain":
        for line in plain_lines:
            print(line)
    elif cfg.fmt == "json":
        for record in records:
            print(json.dumps(record))
    else:
        print("\t".join(columns))
        for record in records:
            print("\t".join(_cell(record.get(col)) for col in columns))


def _digest(p: SparsePolynomial) -> str:
    """Short stable fingerprint of a canonical polynomial for table cells."""
    text = str(p)
    return f"t{len(p.terms)}:{hashlib.sha256(text.encode()).hexdigest()[:12]}"


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_park(cfg: RunConfig) -> int:
    outcome = simulate_parking(cfg.sizes, cfg.z, cfg.prefs)
    record: dict = {"sizes": list(cfg.sizes), "z": cfg.z, "prefs": list(cfg.prefs)}
    if isinstance(outcome, Parked):
        layout = outcome.layout.render()
        record.update(outcome="parked", layout=layout)
        plain = layout
        code = EXIT_OK
    elif isinstance(outcome, Collision):
        record.update(
            outcome="collision",
            car=outcome.car,
            first_empty=outcome.first_empty,
            blocked_at=outcome.blocked_at,
        )
        plain = (
            f"collision: car {outcome.car} reached empty spot {outcome.first_empty}"
            f" but spot {outcome.blocked_at} is occupied"
        )
        code = EXIT_FAILURE
    else:
        record.update(outcome="overflow", car=outcome.car, first_empty=outcome.first_empty)
        if outcome.first_empty is None:
            plain = f"overflow: car {outcome.car} found no empty spot at or after its preference"
        else:
            plain = (
                f"overflow: car {outcome.car} would run past the last spot"
                f" from spot {outcome.first_empty}"
            )
        code = EXIT_FAILURE
    _emit(cfg, [record], [plain], PARK_COLUMNS)
    return code


def cmd_count(cfg: RunConfig) -> int:
    formula = count_by_formula(cfg.sizes, cfg.z)
    record: dict = {"sizes": list(cfg.sizes), "z": cfg.z, "formula": formula}
    if not cfg.do_enumerate:
        _emit(cfg, [record], [str(formula)], COUNT_COLUMNS)
        return EXIT_OK
    budget = None if cfg.force else cfg.budget
    report = count_report(cfg.sizes, cfg.z, budget=budget, workers=cfg.workers)
    record.update(
        enumerated=report.enumerated,
        match=report.match,
        tuples_scanned=report.tuples_scanned,
    )
    plain = (
        f"formula={report.formula} enumerated={report.enumerated}"
        f" match={_bool_text(report.match)}"
    )
    _emit(cfg, [record], [plain], COUNT_COLUMNS)
    return EXIT_OK if report.match else EXIT_FAILURE


def _subsets(n: int, include_empty: bool) -> Iterator[IndexSet]:
    for k in range(0 if include_empty else 1, n + 1):
        for combo in combinations(range(1, n + 1), k):
            yield IndexSet(combo)


def _rows_recurrence(cfg: RunConfig) -> Iterator[dict]:
    for n in range(cfg.n_max + 1):
        for sizes in product(range(1, cfg.y_max + 1), repeat=n):
            for nxt in range(1, cfg.y_max + 1):
                for z in range(1, cfg.z_max + 1):
                    report = verify_recurrence(sizes, nxt, z)
                    yield {
                        "suite": "recurrence",
                        "instance": f"sizes={_csv(sizes) or '-'} next={nxt} z={z}",
                        "lhs": report.formula,
                        "rhs": report.enumerated,
                        "match": report.match,
                    }


def _rows_identity(cfg: RunConfig, name: str) -> Iterator[dict]:
    if cfg.ground is not None:
        grounds: Iterable[IndexSet] = [IndexSet(cfg.ground)]
    else:
        grounds = _subsets(cfg.n_max, include_empty=name != "easy")
    for A in grounds:
        if name == "easy" and not A:
            raise ValueError("the easy identity needs a nonempty --set")
        if cfg.randomized or (name != "easy" and len(A) > SYMBOLIC_BUDGET):
            ok = random_identity_check(name, A, trials=cfg.trials, seed=cfg.seed)
            if A:
                first = ParameterAssignment.random_for(A, random.Random(cfg.seed))
                lhs, rhs = identity_value_sides(name, A, first)
            else:
                lhs = rhs = 1
            instance = f"A={{{_csv(A)}}} randomized trials={cfg.trials} seed={cfg.seed}"
            yield {"suite": name, "instance": instance, "lhs": lhs, "rhs": rhs, "match": ok}
        else:
            lhs_p, rhs_p = identity_sides(name, A)
            yield {
                "suite": name,
                "instance": f"A={{{_csv(A)}}} symbolic",
                "lhs": _digest(lhs_p),
                "rhs": _digest(rhs_p),
                "match": lhs_p == rhs_p,
            }


def _rows_specialization(cfg: RunConfig) -> Iterator[dict]:
    for n in range(cfg.n_max + 1):
        for sizes in product(range(1, cfg.y_max + 1), repeat=n):
            for z in range(1, cfg.z_max + 1):
                lhs = f_as_t_specialization(sizes, z)
                rhs = count_by_formula(sizes, z)
                yield {
                    "suite": "specialization",
                    "instance": f"sizes={_csv(sizes) or '-'} z={z}",
                    "lhs": lhs,
                    "rhs": rhs,
                    "match": lhs == rhs,
                }


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.n_max < 0 or cfg.y_max < 1 or cfg.z_max < 1:
        raise ValueError(
            f"invalid sweep ranges: n_max={cfg.n_max} y_max={cfg.y_max} z_max={cfg.z_max}"
        )
    suites = [cfg.suite] if cfg.suite != "all" else [
        "recurrence", "easy", "sheffer", "binomial", "specialization",
    ]
    rows: list[dict] = []
    for suite in suites:
        if suite == "recurrence":
            rows.extend(_rows_recurrence(cfg))
        elif suite == "specialization":
            rows.extend(_rows_specialization(cfg))
        else:
            rows.extend(_rows_identity(cfg, suite))
    plain = [
        f"{row['suite']} {row['instance']}: lhs={row['lhs']} rhs={row['rhs']}"
        f" match={_bool_text(row['match'])}"
        for row in rows
    ]
    _emit(cfg, rows, plain, VERIFY_COLUMNS)
    return EXIT_OK if all(row["match"] for row in rows) else EXIT_FAILURE


def cmd_table(cfg: RunConfig) -> int:
    if not 0 <= cfg.n_max <= 12:
        raise ValueError(f"table needs 0 <= n_max <= 12, got {cfg.n_max}")
    if cfg.z_max < 1:
        raise ValueError(f"z_max must be >= 1, got {cfg.z_max}")
    if cfg.family == "pattern" and not cfg.pattern:
        raise ValueError("--pattern is required for the pattern family")
    if cfg.family == "const" and cfg.car < 1:
        raise ValueError(f"--car must be >= 1, got {cfg.car}")

    def sizes_for(n: int) -> tuple[int, ...]:
        if cfg.family == "ones":
            return (1,) * n
        if cfg.family == "const":
            return (cfg.car,) * n
        return tuple(islice(cycle(cfg.pattern), n))

    rows = []
    for n in range(cfg.n_max + 1):
        for z in range(1, cfg.z_max + 1):
            count = count_by_formula(sizes_for(n), z)
            rows.append({"family": cfg.family, "n": n, "z": z, "count": count})
    plain = [f"n={row['n']} z={row['z']} count={row['count']}" for row in rows]
    _emit(cfg, rows, plain, TABLE_COLUMNS)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkseq",
        description="Parking sequences of variable-size cars behind a trailer:"
        " simulate, count, verify, tabulate.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain", dest="fmt")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_park = sub.add_parser("park", parents=[common], help="run one parking attempt")
    p_park.add_argument("--sizes", type=_csv_ints, required=True, metavar="CSV",
                        help="car sizes in arrival order; empty string for no cars")
    p_park.add_argument("--z", type=int, required=True, help="trailer parameter (z-1 trailer spots)")
    p_park.add_argument("--prefs", type=_csv_ints, required=True, metavar="CSV",
                        help="preferred spots, one per car")

    p_count = sub.add_parser("count", parents=[common], help="count parking sequences")
    p_count.add_argument("--sizes", type=_csv_ints, required=True, metavar="CSV")
    p_count.add_argument("--z", type=int, required=True)
    p_count.add_argument("--enumerate", action="store_true", dest="do_enumerate",
                         help="also run the brute-force oracle and compare")
    p_count.add_argument("--budget", type=int, default=None,
                         help=f"enumeration guard (default {DEFAULT_BUDGET} or $PARKSEQ_BUDGET)")
    p_count.add_argument("--force", action="store_true", help="enumerate past the budget")
    p_count.add_argument("--workers", type=int, default=1,
                         help="shard enumeration by first preference")

    p_verify = sub.add_parser("verify", parents=[common], help="verify counting identities")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--set", type=_csv_ints, default=None, dest="ground", metavar="CSV",
                          help="check one explicit ground set instead of sweeping")
    p_verify.add_argument("--n-max", type=int, default=3, dest="n_max")
    p_verify.add_argument("--y-max", type=int, default=3, dest="y_max")
    p_verify.add_argument("--z-max", type=int, default=4, dest="z_max")
    p_verify.add_argument("--random", action="store_true", dest="randomized",
                          help="force randomized evaluation instead of symbolic expansion")
    p_verify.add_argument("--trials", type=int, default=20)
    p_verify.add_argument("--seed", type=int, default=42)

    p_table = sub.add_parser("table", parents=[common], help="tabulate count families")
    p_table.add_argument("--family", choices=FAMILIES, default="ones")
    p_table.add_argument("--car", type=int, default=2,
                         help="car size for the const family")
    p_table.add_argument("--pattern", type=_csv_ints, default=(), metavar="CSV",
                         help="size pattern, cycled to length n, for the pattern family")
    p_table.add_argument("--n-max", type=int, default=8, dest="n_max")
    p_table.add_argument("--z-max", type=int, default=4, dest="z_max")
    return parser


def _default_budget() -> int:
    raw = os.environ.get("PARKSEQ_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"PARKSEQ_BUDGET must be an integer, got {raw!r}")


def _config_from(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    if args.subcommand == "count" and getattr(args, "budget", None) is None:
        fields["budget"] = _default_budget()
    return RunConfig(**fields)


_DISPATCH = {
    "park": cmd_park,
    "count": cmd_count,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse already reported the problem
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = _config_from(args)
        return _DISPATCH[cfg.subcommand](cfg)
    except (ValueError, EnumerationBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main())


if __name__ == "__main__":
    run()
