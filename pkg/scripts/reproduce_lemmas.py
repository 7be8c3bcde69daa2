#!/usr/bin/env python3
"""Tabulate both error formulas against the exact oracle and the simulator.

Writes results/lemma_comparison.csv (sweep schema) and prints, per (n, eps):
worst-target exact error over eps*n, and the relative gap between the
average-error formula and the exact uniform-target average.

    python scripts/reproduce_lemmas.py --trials 200000 --seed 42
"""

import argparse
from pathlib import Path

import numpy as np

from noisy_bisect.cli import write_csv
from noisy_bisect.exact import exact_average_error
from noisy_bisect.sweep import SWEEP_COLUMNS, SweepConfig, sweep_rows

REPO_ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="4,16,64,256,1024,4096")
    ap.add_argument("--eps", default="0.01,0.05,0.1,0.2,0.3,0.45")
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--out", type=Path, default=REPO_ROOT / "results" / "lemma_comparison.csv")
    args = ap.parse_args()

    n_values = [int(v) for v in args.n.split(",")]
    epsilons = [float(v) for v in args.eps.split(",")]
    config = SweepConfig(n_values, epsilons, trials=args.trials, seed=args.seed, exact=True)
    rows = list(sweep_rows(config))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    write_csv(str(args.out), SWEEP_COLUMNS, rows)

    print(f"{'n':>6} {'eps':>5} {'max_t E/(eps n)':>16} {'exact avg':>12} {'formula':>12} "
          f"{'rel gap':>8} {'mc mean':>12} {'mc se':>9}")
    for row in rows:
        n, eps = row["n"], row["epsilon"]
        worst = max(exact_average_error(n, eps).per_target) / (eps * n)
        print(f"{n:>6} {eps:>5} {worst:>16.4f} {row['exact_error']:>12.5f} {row['lemma2_value']:>12.5f} "
              f"{row['lemma2_rel_gap']:>8.4f} {row['mc_mean']:>12.5f} {row['mc_stderr']:>9.5f}")
    print(f"\nwrote {args.out}")


if __name__ == "__main__":
    main()
