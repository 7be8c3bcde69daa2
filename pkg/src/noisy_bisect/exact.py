"""Exact expected error of the noisy search, with no sampling.

Every run of the search follows one root-to-leaf path of the interval tree
rooted at ``[0, n)``: an internal node ``[lo, hi)`` has children
``[lo, p)`` and ``[p, hi)`` with ``p = (lo + hi) // 2``, and the edge that
agrees with the true direction has probability ``1 - eps``. The tree has
``2n - 1`` nodes, so the expectation for one target costs O(n) and the
average over all targets costs O(n^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from noisy_bisect.model import SearchParams, split_point

DEFAULT_CAP = 2**14


class OracleTooLarge(RuntimeError):
    """Raised when an all-targets exact run would exceed the size cap."""


@dataclass(frozen=True)
class ExactErrorReport:
    n: int
    epsilon: float
    per_target: list[float]
    average: float


def exact_expected_error(n: int, true_index: int, epsilon: float) -> float:
    SearchParams(n, epsilon)
    if not 0 <= true_index < n:
        raise ValueError(f"true_index {true_index} outside [0, {n})")
    t, keep, flip = true_index, 1.0 - epsilon, epsilon

    def walk(lo: int, hi: int) -> float:
        if hi - lo == 1:
            return float(abs(lo - t))
        p = split_point(lo, hi)
        left, right = walk(lo, p), walk(p, hi)
        if t < p:
            return keep * left + flip * right
        return flip * left + keep * right

    return walk(0, n)


def per_target_errors(n: int, epsilon: float) -> np.ndarray:
    """The tree-walk recurrence evaluated for all targets at once.

    Each node carries a length-``n`` vector indexed by target; the arithmetic
    per target is the same as in :func:`exact_expected_error`.
    """
    targets = np.arange(n)
    keep, flip = 1.0 - epsilon, epsilon

    def walk(lo: int, hi: int) -> np.ndarray:
        if hi - lo == 1:
            return np.abs(lo - targets).astype(np.float64)
        p = split_point(lo, hi)
        left, right = walk(lo, p), walk(p, hi)
        return np.where(targets < p, keep * left + flip * right, flip * left + keep * right)

    return walk(0, n)


def exact_average_error(n: int, epsilon: float, cap: int = DEFAULT_CAP) -> ExactErrorReport:
    """Exact expected error for every target and its mean under uniform targets."""
    SearchParams(n, epsilon)
    if n > cap:
        raise OracleTooLarge(
            f"exact average for n={n} exceeds the cap of {cap} (cost grows as n^2); "
            "use monte_carlo with a UniformRandom target instead"
        )
    per_target = per_target_errors(n, epsilon).tolist()
    return ExactErrorReport(n, epsilon, per_target, math.fsum(per_target) / n)


def brute_force_expected_error(n: int, true_index: int, epsilon: float) -> float:
    """Enumerate every flip pattern of ``ceil(log2 n)`` comparisons.

    Bit ``k`` of a pattern says whether comparison ``k`` is answered wrongly.
    Runs that finish early ignore their trailing bits; weighting each pattern
    by its full-length probability still sums those bits out correctly.
    Independent of the tree walk; meant for small ``n`` only.
    """
    SearchParams(n, epsilon)
    if not 0 <= true_index < n:
        raise ValueError(f"true_index {true_index} outside [0, {n})")
    depth = (n - 1).bit_length()
    total = []
    for pattern in product((False, True), repeat=depth):
        lo, hi, step = 0, n, 0
        while hi - lo > 1:
            probe = split_point(lo, hi)
            go_left = (true_index < probe) != pattern[step]
            step += 1
            if go_left:
                hi = probe
            else:
                lo = probe
        wrong = sum(pattern)
        weight = epsilon**wrong * (1.0 - epsilon) ** (depth - wrong)
        total.append(weight * abs(lo - true_index))
    return math.fsum(total)
