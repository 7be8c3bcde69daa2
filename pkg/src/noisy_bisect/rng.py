"""SplitMix64 streams and per-trial substream derivation.

SplitMix64 (Steele, Lea & Flood 2014; reference C code by S. Vigna) keeps a
64-bit counter, advances it by the golden-ratio increment and returns an
avalanche hash of the counter. Because output ``k`` of a stream depends only
on ``seed + k * GAMMA``, the generator is counter-based and can be evaluated
for many streams at once with numpy ``uint64`` arithmetic.

Substream contract (stable, part of the CSV reproducibility guarantee)::

    substream_seed(master, i) = mix64(mix64(master) + (i + 1) * GAMMA)   mod 2**64

i.e. the ``i``-th output of a SplitMix64 stream seeded with ``mix64(master)``.
Trial ``i`` then runs its own SplitMix64 seeded with that value.

Floats are ``(next_u64() >> 11) * 2**-53``, uniform on [0, 1).
Bounded integers are ``floor(random() * n)``.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_TWO_M53 = 2.0**-53


def mix64(z: int) -> int:
    """SplitMix64 finaliser: a bijection on 64-bit integers."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def substream_seed(master_seed: int, index: int) -> int:
    if not 0 <= master_seed <= MASK64:
        raise ValueError(f"master seed must be a 64-bit unsigned integer, got {master_seed}")
    if index < 0:
        raise ValueError(f"substream index must be nonnegative, got {index}")
    return mix64(mix64(master_seed) + (index + 1) * GAMMA)


class SplitMix64:
    """Scalar SplitMix64 stream. Exposes ``random()`` like :class:`random.Random`."""

    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.state = seed

    @classmethod
    def for_trial(cls, master_seed: int, index: int) -> "SplitMix64":
        return cls(substream_seed(master_seed, index))

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def random(self) -> float:
        return (self.next_u64() >> 11) * _TWO_M53

    def randbelow(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be positive")
        return int(self.random() * n)


# -- vectorised counterparts (bit-identical to the scalar path) -------------

_GAMMA_U = np.uint64(GAMMA)
_M1_U = np.uint64(_M1)
_M2_U = np.uint64(_M2)


def mix64_array(z: np.ndarray) -> np.ndarray:
    z = z.astype(np.uint64, copy=True)
    z ^= z >> np.uint64(30)
    z *= _M1_U
    z ^= z >> np.uint64(27)
    z *= _M2_U
    z ^= z >> np.uint64(31)
    return z


def substream_seeds(master_seed: int, start: int, stop: int) -> np.ndarray:
    """``substream_seed(master_seed, i)`` for ``i`` in ``range(start, stop)``."""
    base = np.uint64(mix64(master_seed))
    idx = np.arange(start + 1, stop + 1, dtype=np.uint64)
    return mix64_array(base + idx * _GAMMA_U)


def advance(states: np.ndarray) -> np.ndarray:
    """Step every stream once; returns the new states (input untouched)."""
    return states + _GAMMA_U


def to_unit(outputs: np.ndarray) -> np.ndarray:
    return (outputs >> np.uint64(11)).astype(np.float64) * _TWO_M53
