"""Exit criteria. Each test prints one PASS/FAIL line (collected in the summary)."""

import math
import time

import numpy as np

from noisy_bisect.bounds import a_recurrence, b_recurrence, lemma2_value
from noisy_bisect.cli import main
from noisy_bisect.exact import (
    brute_force_expected_error,
    exact_average_error,
    exact_expected_error,
)
from noisy_bisect.model import SearchParams, run_noisy_search
from noisy_bisect.montecarlo import Fixed, UniformRandom, monte_carlo, simulate_errors
from noisy_bisect.rng import SplitMix64
from noisy_bisect.sweep import SweepConfig, sweep_rows

from test_cli import GOLDEN, GOLDEN_ARGS

EPS_GRID = [round(0.05 * i, 2) for i in range(1, 10)]  # 0.05 .. 0.45
SEED = 42


def rel_err(got, want):
    return abs(got - want) / abs(want) if want else abs(got)


def test_c1_lemma1_dominance(criterion):
    start = time.perf_counter()
    violations, cells, worst = 0, 0, 0.0
    for k in range(1, 11):
        n = 2**k
        for eps in EPS_GRID:
            per_target = np.array(exact_average_error(n, eps).per_target)
            violations += int((per_target > eps * n).sum())
            cells += n
            worst = max(worst, per_target.max() / (eps * n))
    elapsed = time.perf_counter() - start
    criterion("C1 lemma-1 dominance", violations == 0 and elapsed < 30,
              f"{cells} (n, t, eps) cells, {violations} violations, max error/(eps n) = {worst:.4f}, "
              f"{elapsed:.2f}s")


def test_c2_telescoping_identity(criterion):
    start = time.perf_counter()
    worst_closed = worst_oracle = 0.0
    for k in range(0, 13):
        n = 2**k
        for eps in EPS_GRID:
            a = a_recurrence(n, eps)
            worst_closed = max(worst_closed, rel_err(a, eps * (n - 1)))
            worst_oracle = max(worst_oracle, rel_err(exact_expected_error(n, 0, eps), a))
    elapsed = time.perf_counter() - start
    ok = worst_closed <= 1e-12 and worst_oracle <= 1e-9 and elapsed < 10
    criterion("C2 telescoping identity", ok,
              f"max rel err vs eps(n-1) {worst_closed:.2e} (tol 1e-12), vs oracle t=0 "
              f"{worst_oracle:.2e} (tol 1e-9), {elapsed:.2f}s")


def test_c3_geometric_series_identity(criterion):
    start = time.perf_counter()
    worst = 0.0
    for k in range(0, 21):
        n = 2**k
        for eps in [round(0.05 * i, 2) for i in range(1, 20)]:
            closed = lemma2_value(n, eps) * (1 - ((1 - eps) / 2) ** k)
            worst = max(worst, rel_err(b_recurrence(n, eps), closed))
    elapsed = time.perf_counter() - start
    criterion("C3 geometric-series identity", worst <= 1e-12 and elapsed < 1,
              f"max rel err {worst:.2e} (tol 1e-12), {elapsed:.3f}s")


def test_c4_lemma2_vs_exact_average(criterion):
    start = time.perf_counter()
    config = SweepConfig([256, 1024], [0.05, 0.1, 0.2], policy=UniformRandom(), exact=True)
    rows = list(sweep_rows(config))
    elapsed = time.perf_counter() - start
    gaps = []
    for row in rows:
        recomputed = abs(row["exact_error"] - row["lemma2_value"]) / row["lemma2_value"]
        assert math.isclose(row["lemma2_rel_gap"], recomputed, rel_tol=1e-12)
        gaps.append(f"n={row['n']} eps={row['epsilon']}: {row['lemma2_rel_gap']:.4f}")
    ok = len(rows) == 6 and all(r["lemma2_rel_gap"] <= 0.25 for r in rows) and elapsed < 120
    criterion("C4 lemma-2 vs exact average", ok,
              f"rel gaps [{'; '.join(gaps)}] (band 0.25), {elapsed:.2f}s")


def test_c5_oracle_matches_brute_force(criterion):
    start = time.perf_counter()
    worst, checked = 0.0, 0
    for n in range(1, 33):
        for eps in (0.1, 0.3, 0.5):
            for t in range(n):
                brute = brute_force_expected_error(n, t, eps)
                worst = max(worst, rel_err(exact_expected_error(n, t, eps), brute))
                checked += 1
    elapsed = time.perf_counter() - start
    criterion("C5 tree walk == brute force", worst <= 1e-12 and elapsed < 5,
              f"{checked} cases, max rel err {worst:.2e} (tol 1e-12), {elapsed:.2f}s")


def test_c6_monte_carlo_consistency(criterion):
    start = time.perf_counter()
    worst_z, cells = 0.0, []
    for eps in (0.1, 0.3):
        params = SearchParams(64, eps)
        for policy in (Fixed(0), Fixed(32), UniformRandom()):
            est = monte_carlo(params, policy, 10**6, SEED)
            if isinstance(policy, Fixed):
                truth = exact_expected_error(64, policy.target, eps)
            else:
                truth = exact_average_error(64, eps).average
            z = abs(est.mean - truth) / est.std_err
            worst_z = max(worst_z, z)
            cells.append(z <= 5)
    elapsed = time.perf_counter() - start
    criterion("C6 Monte Carlo vs oracle", all(cells) and elapsed < 30,
              f"6 cells, max |mean - exact| / stderr = {worst_z:.2f} (limit 5), {elapsed:.2f}s")


def test_c7_determinism_and_parallel_invariance(criterion, tmp_path, capsys):
    outputs = []
    for workers in ("1", "1", "2", "8"):
        path = tmp_path / f"sweep_{len(outputs)}.csv"
        assert main(GOLDEN_ARGS + ["--workers", workers, "--out", str(path)]) == 0
        outputs.append(path.read_bytes())
    sweep_ok = all(o == GOLDEN.read_bytes() for o in outputs)

    sim = []
    for workers in ("1", "1", "3"):
        main(["simulate", "--n", "64", "--eps", "0.1", "--average", "--trials", "200000",
              "--seed", "42", "--workers", workers])
        sim.append(capsys.readouterr().out)
    sim_ok = len(set(sim)) == 1
    criterion("C7 determinism + parallel invariance", sweep_ok and sim_ok,
              f"golden sweep identical over 4 runs (workers 1,1,2,8): {sweep_ok}; "
              f"simulate identical over workers 1,1,3: {sim_ok}")


def test_c8_degenerate_and_deterministic(criterion):
    single = all(
        (out.returned_index, out.comparisons, out.error) == (0, 0, 0)
        for eps in (0.0, 0.3, 1.0)
        for seed in range(20)
        for out in [run_noisy_search(SearchParams(1, eps), 0, SplitMix64(seed))]
    )
    noiseless = all(
        run_noisy_search(SearchParams(n, 0.0), t, SplitMix64(t)).error == 0
        for n in (1023, 1024, 1025)
        for t in range(n)
    )
    always_wrong = simulate_errors(SearchParams(4, 1.0), Fixed(0), SEED, 0, 10_000)
    wrong_ok = bool((always_wrong == 3).all())
    criterion("C8 degenerate/deterministic cases", single and noiseless and wrong_ok,
              f"n=1 -> index 0, 0 comparisons: {single}; eps=0 exact for all t <= 1024: {noiseless}; "
              f"eps=1, n=4, t=0 error 3 on all 10^4 trials: {wrong_ok}")
