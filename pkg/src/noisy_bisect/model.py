"""Noisy comparator and the imperfect binary search loop.

The table is abstracted to indices ``0..n-1``; only the order of the target
relative to the probe matters. The loop works on a half-open interval
``[lo, hi)``, probes ``(lo + hi) // 2``, keeps ``[lo, probe)`` on LEFT and
``[probe, hi)`` on RIGHT, and returns ``lo`` once one slot remains. A target
equal to the probe is "to the right", so a noiseless search is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Protocol


class RandomStream(Protocol):
    def random(self) -> float: ...


class Direction(enum.Enum):
    LEFT = "left"  # keep [lo, probe)
    RIGHT = "right"  # keep [probe, hi)

    def flipped(self) -> "Direction":
        return Direction.RIGHT if self is Direction.LEFT else Direction.LEFT


@dataclass(frozen=True)
class SearchParams:
    n: int
    epsilon: float

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"table size must be an integer >= 1, got {self.n!r}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon!r}")


class Decision(NamedTuple):
    probe: int
    truth: Direction
    taken: Direction


@dataclass
class SearchOutcome:
    returned_index: int
    true_index: int
    error: int
    comparisons: int
    decisions: list[Decision] = field(default_factory=list)


def split_point(lo: int, hi: int) -> int:
    return (lo + hi) // 2


def truth_direction(true_index: int, probe: int) -> Direction:
    return Direction.LEFT if true_index < probe else Direction.RIGHT


def noisy_compare(true_index: int, probe: int, epsilon: float, rng: RandomStream) -> Direction:
    """Compare target against probe, answering wrongly with probability ``epsilon``.

    Consumes exactly one ``rng.random()`` draw ``u``; the answer is flipped
    iff ``u < epsilon``, so ``epsilon = 0`` never flips and ``epsilon = 1``
    always does.
    """
    truth = truth_direction(true_index, probe)
    if rng.random() < epsilon:
        return truth.flipped()
    return truth


def run_noisy_search(params: SearchParams, true_index: int, rng: RandomStream) -> SearchOutcome:
    if not 0 <= true_index < params.n:
        raise ValueError(f"true_index {true_index} outside [0, {params.n})")
    lo, hi = 0, params.n
    decisions = []
    while hi - lo > 1:
        probe = split_point(lo, hi)
        taken = noisy_compare(true_index, probe, params.epsilon, rng)
        decisions.append(Decision(probe, truth_direction(true_index, probe), taken))
        if taken is Direction.LEFT:
            hi = probe
        else:
            lo = probe
    return SearchOutcome(
        returned_index=lo,
        true_index=true_index,
        error=abs(lo - true_index),
        comparisons=len(decisions),
        decisions=decisions,
    )
