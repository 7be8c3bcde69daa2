"""Command-line front end. Every subcommand writes CSV.

    noisy-bisect bounds   --n 1024 --eps 0.1
    noisy-bisect exact    --n 4,8 --eps 0.1 --average
    noisy-bisect simulate --n 4 --eps 0.1 --target 0 --trials 100000 --seed 7
    noisy-bisect sweep    --n 256,1024 --eps 0.05,0.1 --average --exact --trials 100000 --out sweep.csv

Floats are written with 12 significant digits; missing values are empty.
"""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import contextmanager
from typing import Iterable, Optional, Sequence

from noisy_bisect.bounds import bound_report
from noisy_bisect.exact import DEFAULT_CAP
from noisy_bisect.model import SearchParams
from noisy_bisect.montecarlo import Fixed, UniformRandom, monte_carlo
from noisy_bisect.rng import MASK64
from noisy_bisect.sweep import ALL_TARGETS, SWEEP_COLUMNS, SweepConfig, sweep_rows

BOUNDS_COLUMNS = ["n", "epsilon", "lemma1", "lemma2", "a_rec", "b_rec"]
EXACT_COLUMNS = ["n", "epsilon", "policy", "exact_error", "lemma1_bound", "lemma2_value"]
SIMULATE_COLUMNS = ["n", "epsilon", "policy", "trials", "seed", "error_sum",
                    "mc_mean", "mc_stderr", "ci95_low", "ci95_high"]


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("table sizes must be >= 1")
    return values


def _eps_list(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated decimals, got {text!r}")
    if any(not 0.0 <= v <= 1.0 for v in values):
        raise argparse.ArgumentTypeError("epsilon values must lie in [0, 1]")
    return values


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= value <= MASK64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="noisy-bisect", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, targets=True, all_targets=False):
        p.add_argument("--n", type=_int_list, required=True, help="table sizes, e.g. 256,1024")
        p.add_argument("--eps", type=_eps_list, required=True, help="flip probabilities, e.g. 0.05,0.1")
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--format", choices=["csv"], default="csv")
        if targets:
            g = p.add_mutually_exclusive_group()
            g.add_argument("--target", type=_nonneg, default=None, help="fixed true index")
            g.add_argument("--average", action="store_true", help="uniformly random target (default)")
            if all_targets:
                g.add_argument("--all-targets", action="store_true", help="one row per target")

    common(sub.add_parser("bounds", help="closed forms and recurrences"), targets=False)

    p = sub.add_parser("exact", help="exact expected error by tree walk")
    common(p, all_targets=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    for name, help_ in [("simulate", "Monte Carlo estimate"), ("sweep", "full comparison table")]:
        p = sub.add_parser(name, help=help_)
        common(p, all_targets=name == "sweep")
        p.add_argument("--trials", type=_nonneg, default=0 if name == "sweep" else 100_000)
        p.add_argument("--seed", type=_seed, default=0)
        p.add_argument("--workers", type=int, default=1)
        if name == "sweep":
            p.add_argument("--exact", action="store_true", help="run the exact oracle where n <= cap")
            p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    return parser


def _policy(args):
    if getattr(args, "all_targets", False):
        return ALL_TARGETS
    if args.target is not None:
        return Fixed(args.target)
    return UniformRandom()


@contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def write_csv(path: Optional[str], columns: Sequence[str], rows: Iterable[dict]) -> None:
    with _output(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([fmt(row[c]) for c in columns])


def _bounds_rows(args):
    for n in args.n:
        for eps in args.eps:
            r = bound_report(n, eps)
            yield {"n": n, "epsilon": eps, "lemma1": r.lemma1, "lemma2": r.lemma2,
                   "a_rec": r.a_rec, "b_rec": r.b_rec}


def _exact_rows(args):
    config = SweepConfig(args.n, args.eps, policy=_policy(args), exact=True, cap=args.cap)
    for row in sweep_rows(config):
        yield {c: row[c] for c in EXACT_COLUMNS}


def _simulate_rows(args):
    policy = _policy(args)
    SweepConfig(args.n, args.eps, policy=policy)  # validates target range
    for n in args.n:
        for eps in args.eps:
            est = monte_carlo(SearchParams(n, eps), policy, args.trials, args.seed, workers=args.workers)
            yield {"n": n, "epsilon": eps, "policy": policy.label(), "trials": est.trials,
                   "seed": est.master_seed, "error_sum": est.error_sum, "mc_mean": est.mean,
                   "mc_stderr": est.std_err, "ci95_low": est.ci95_low, "ci95_high": est.ci95_high}


def _sweep_rows(args):
    config = SweepConfig(args.n, args.eps, policy=_policy(args), trials=args.trials,
                         seed=args.seed, exact=args.exact, cap=args.cap, workers=args.workers)
    return sweep_rows(config)


COMMANDS = {
    "bounds": (BOUNDS_COLUMNS, _bounds_rows),
    "exact": (EXACT_COLUMNS, _exact_rows),
    "simulate": (SIMULATE_COLUMNS, _simulate_rows),
    "sweep": (SWEEP_COLUMNS, _sweep_rows),
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) == 0 and args.command == "simulate":
        parser.error("simulate needs --trials >= 1")
    columns, make_rows = COMMANDS[args.command]
    try:
        rows = list(make_rows(args))  # validate and compute before touching the output
    except ValueError as exc:
        parser.error(str(exc))
    try:
        write_csv(args.out, columns, rows)
    except OSError as exc:
        print(f"noisy-bisect: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
