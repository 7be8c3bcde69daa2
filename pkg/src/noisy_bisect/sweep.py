"""(n, eps) sweeps that put the formulas, the exact oracle and the simulator side by side."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from noisy_bisect.bounds import bound_report
from noisy_bisect.exact import DEFAULT_CAP, exact_average_error, exact_expected_error
from noisy_bisect.model import SearchParams
from noisy_bisect.montecarlo import Fixed, TargetPolicy, UniformRandom, monte_carlo

ALL_TARGETS = "all-targets"

SWEEP_COLUMNS = [
    "n", "epsilon", "policy", "exact_error", "mc_mean", "mc_stderr", "mc_trials",
    "lemma1_bound", "lemma2_value", "a_rec", "b_rec", "seed",
    # |exact - lemma2| / lemma2, average policy only
    "lemma2_rel_gap",
]


@dataclass
class SweepConfig:
    n_values: list[int]
    epsilons: list[float]
    policy: Union[TargetPolicy, str] = UniformRandom()
    trials: int = 0  # 0 skips Monte Carlo
    seed: int = 0
    exact: bool = False
    cap: int = DEFAULT_CAP
    workers: int = 1

    def __post_init__(self):
        if not self.n_values or not self.epsilons:
            raise ValueError("sweep needs at least one table size and one epsilon")
        for n in self.n_values:
            for eps in self.epsilons:
                SearchParams(n, eps)
        if isinstance(self.policy, Fixed):
            bad = [n for n in self.n_values if not 0 <= self.policy.target < n]
            if bad:
                raise ValueError(f"fixed target {self.policy.target} out of range for n={bad[0]}")
        elif not (isinstance(self.policy, UniformRandom) or self.policy == ALL_TARGETS):
            raise ValueError(f"unknown policy {self.policy!r}")
        if self.trials < 0:
            raise ValueError("trials must be >= 0")

    def policies_for(self, n: int) -> list[TargetPolicy]:
        if self.policy == ALL_TARGETS:
            return [Fixed(t) for t in range(n)]
        return [self.policy]


def _exact_values(n, eps, policies, cap) -> list[Optional[float]]:
    if n > cap:
        print(f"warning: n={n} exceeds the exact-oracle cap {cap}; exact_error left empty",
              file=sys.stderr)
        return [None] * len(policies)
    if len(policies) > 1:
        return exact_average_error(n, eps, cap=cap).per_target
    if isinstance(policies[0], UniformRandom):
        return [exact_average_error(n, eps, cap=cap).average]
    return [exact_expected_error(n, policies[0].target, eps)]


def sweep_rows(config: SweepConfig) -> Iterator[dict]:
    """Rows in config order: n outer, eps inner, then target."""
    for n in config.n_values:
        for eps in config.epsilons:
            bounds = bound_report(n, eps)
            params = SearchParams(n, eps)
            policies = config.policies_for(n)
            exacts = (_exact_values(n, eps, policies, config.cap) if config.exact
                      else [None] * len(policies))
            for policy, exact in zip(policies, exacts):
                est = (monte_carlo(params, policy, config.trials, config.seed, workers=config.workers)
                       if config.trials else None)
                gap = None
                if exact is not None and isinstance(policy, UniformRandom) and bounds.lemma2 > 0:
                    gap = abs(exact - bounds.lemma2) / bounds.lemma2
                yield {
                    "n": n,
                    "epsilon": eps,
                    "policy": policy.label(),
                    "exact_error": exact,
                    "mc_mean": est.mean if est else None,
                    "mc_stderr": est.std_err if est else None,
                    "mc_trials": config.trials if est else None,
                    "lemma1_bound": bounds.lemma1,
                    "lemma2_value": bounds.lemma2,
                    "a_rec": bounds.a_rec,
                    "b_rec": bounds.b_rec,
                    "seed": config.seed,
                    "lemma2_rel_gap": gap,
                }
