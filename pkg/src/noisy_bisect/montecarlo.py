"""Seeded Monte Carlo estimate of the search's expected error.

Trial ``i`` draws all of its randomness from its own SplitMix64 substream
(see :mod:`noisy_bisect.rng`): first the target if the policy is
:class:`UniformRandom`, then one draw per comparison. The estimate is
therefore a pure function of ``(params, policy, trials, master_seed)``,
whatever the chunking or worker count, and any single trial can be replayed
with :func:`run_trial`.

The hot path simulates a chunk of trials in lock-step with numpy; it agrees
with :func:`run_trial` trial by trial.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Union

import numpy as np

from noisy_bisect import rng as rng_mod
from noisy_bisect.model import SearchOutcome, SearchParams, run_noisy_search
from noisy_bisect.rng import SplitMix64

Z95 = 1.96
DEFAULT_CHUNK = 1 << 16


@dataclass(frozen=True)
class Fixed:
    target: int

    def label(self) -> str:
        return f"target={self.target}"


@dataclass(frozen=True)
class UniformRandom:
    def label(self) -> str:
        return "average"


TargetPolicy = Union[Fixed, UniformRandom]


@dataclass(frozen=True)
class MonteCarloEstimate:
    trials: int
    master_seed: int
    error_sum: int
    error_sq_sum: int
    mean: float
    std_err: float
    ci95_low: float
    ci95_high: float

    @classmethod
    def from_sums(cls, trials: int, master_seed: int, s1: int, s2: int) -> "MonteCarloEstimate":
        mean = s1 / trials
        if trials > 1:
            # sample variance / trials, from exact integer moments
            num = trials * s2 - s1 * s1
            std_err = math.sqrt(num / (trials * trials * (trials - 1)))
        else:
            std_err = 0.0
        half = Z95 * std_err
        return cls(trials, master_seed, s1, s2, mean, std_err, mean - half, mean + half)


def _check_policy(params: SearchParams, policy: TargetPolicy) -> None:
    if isinstance(policy, Fixed):
        if not 0 <= policy.target < params.n:
            raise ValueError(f"fixed target {policy.target} outside [0, {params.n})")
    elif not isinstance(policy, UniformRandom):
        raise TypeError(f"unknown target policy {policy!r}")


def run_trial(params: SearchParams, policy: TargetPolicy, master_seed: int, index: int) -> SearchOutcome:
    """Replay trial ``index`` with the scalar search loop (trace included)."""
    _check_policy(params, policy)
    stream = SplitMix64.for_trial(master_seed, index)
    target = policy.target if isinstance(policy, Fixed) else stream.randbelow(params.n)
    return run_noisy_search(params, target, stream)


def simulate_errors(params: SearchParams, policy: TargetPolicy, master_seed: int,
                    start: int, stop: int) -> np.ndarray:
    """Per-trial errors for trials ``start..stop-1`` (vectorised, trace-free)."""
    n, eps = params.n, params.epsilon
    states = rng_mod.substream_seeds(master_seed, start, stop)
    if isinstance(policy, Fixed):
        target = np.full(stop - start, policy.target, dtype=np.int64)
    else:
        states = rng_mod.advance(states)
        u = rng_mod.to_unit(rng_mod.mix64_array(states))
        target = (u * n).astype(np.int64)
    lo = np.zeros(stop - start, dtype=np.int64)
    hi = np.full(stop - start, n, dtype=np.int64)
    while True:
        active = hi - lo > 1
        if not active.any():
            break
        states = np.where(active, rng_mod.advance(states), states)
        u = rng_mod.to_unit(rng_mod.mix64_array(states))
        probe = (lo + hi) // 2
        go_left = (target < probe) != (u < eps)
        hi = np.where(active & go_left, probe, hi)
        lo = np.where(active & ~go_left, probe, lo)
    return np.abs(lo - target)


def _block_sums(params, policy, master_seed, start, stop) -> tuple[int, int]:
    errors = simulate_errors(params, policy, master_seed, start, stop)
    s1 = int(errors.sum())
    if (params.n - 1) ** 2 * len(errors) < 2**63:
        s2 = int((errors * errors).sum())
    else:
        s2 = sum(e * e for e in errors.tolist())
    return s1, s2


def monte_carlo(params: SearchParams, policy: TargetPolicy, trials: int, master_seed: int,
                *, workers: int = 1, chunk: int = DEFAULT_CHUNK) -> MonteCarloEstimate:
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 0 <= master_seed <= rng_mod.MASK64:
        raise ValueError(f"master seed must be a 64-bit unsigned integer, got {master_seed}")
    _check_policy(params, policy)
    blocks = [(s, min(s + chunk, trials)) for s in range(0, trials, chunk)]
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sums = list(pool.map(lambda b: _block_sums(params, policy, master_seed, *b), blocks))
    else:
        sums = [_block_sums(params, policy, master_seed, *b) for b in blocks]
    s1 = sum(s for s, _ in sums)
    s2 = sum(s for _, s in sums)
    return MonteCarloEstimate.from_sums(trials, master_seed, s1, s2)
