"""Closed-form error formulas and the finite halving recurrences behind them.

``lemma1_bound`` is the worst-target bound ``eps * n``; ``lemma2_value`` is
the target-averaged formula ``eps * n * (0.5 + eps) / (1 + eps)``. The two
recurrences unroll the same halving arguments down to a one-slot table:

    a(1) = 0,  a(n) = a(n/2) + eps * n/2                      (= eps * (n - 1))
    b(1) = 0,  b(n) = eps * (n/4 + eps * n/2) + (1 - eps) * b(n/2)

and are only defined for powers of two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


def _check(n: int, epsilon: float) -> None:
    if n < 1:
        raise ValueError(f"table size must be >= 1, got {n}")
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _check_pow2(n: int) -> None:
    if not is_power_of_two(n):
        raise ValueError(f"recurrence needs a power-of-two table size, got {n}")


def lemma1_bound(n: int, epsilon: float) -> float:
    _check(n, epsilon)
    return epsilon * n


def lemma2_value(n: int, epsilon: float) -> float:
    _check(n, epsilon)
    return epsilon * n * (0.5 + epsilon) / (1.0 + epsilon)


def a_recurrence(n: int, epsilon: float) -> float:
    _check(n, epsilon)
    _check_pow2(n)
    a, m = 0.0, 1
    while m < n:
        m *= 2
        a += epsilon * (m / 2)
    return a


def b_recurrence(n: int, epsilon: float) -> float:
    _check(n, epsilon)
    _check_pow2(n)
    b, m = 0.0, 1
    while m < n:
        m *= 2
        b = epsilon * (m / 4 + epsilon * (m / 2)) + (1.0 - epsilon) * b
    return b


@dataclass(frozen=True)
class BoundReport:
    n: int
    epsilon: float
    lemma1: float
    lemma2: float
    a_rec: Optional[float]  # None unless n is a power of two
    b_rec: Optional[float]


def bound_report(n: int, epsilon: float) -> BoundReport:
    pow2 = is_power_of_two(n)
    return BoundReport(
        n=n,
        epsilon=epsilon,
        lemma1=lemma1_bound(n, epsilon),
        lemma2=lemma2_value(n, epsilon),
        a_rec=a_recurrence(n, epsilon) if pow2 else None,
        b_rec=b_recurrence(n, epsilon) if pow2 else None,
    )
