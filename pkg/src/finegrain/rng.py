"""SplitMix64, the generator behind every seeded construction.

State update and output, all arithmetic modulo 2**64::

    state = state + 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

``randbelow(m)`` rejects outputs ``>= 2**64 - (2**64 % m)`` and returns the
remainder, so it is unbiased and independent of the platform.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

T = TypeVar("T")

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def randbelow(self, m: int) -> int:
        if m <= 0:
            raise ValueError("randbelow needs m >= 1")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % m

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.randbelow(hi - lo + 1)

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.randbelow(len(seq))]

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.randbelow(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def sample(self, population: Sequence[T], k: int) -> list[T]:
        pool = list(population)
        self.shuffle(pool)
        return pool[:k]

    def coin(self, p_num: int = 1, p_den: int = 2) -> bool:
        return self.randbelow(p_den) < p_num

    def spawn(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())
