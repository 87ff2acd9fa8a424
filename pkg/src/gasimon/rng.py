"""Portable 64-bit pseudo-random generator.

SplitMix64, written out so that tables generated from a seed are
reproducible in any language:

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    return z ^ (z >> 31)

Bounded draws use rejection sampling: for a bound ``k`` the largest
multiple of ``k`` not exceeding ``2**64`` is the cutoff, raw outputs at or
above it are discarded, and the accepted value is reduced mod ``k``.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Mutable generator state; callers own and thread it explicitly."""

    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``.

        ``bound`` may exceed ``2**64``; in that case several words are
        concatenated (most significant first) before the rejection test.
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        words = max(1, (bound.bit_length() + 63) // 64)
        span = 1 << (64 * words)
        cutoff = span - span % bound
        while True:
            x = 0
            for _ in range(words):
                x = (x << 64) | self.next_u64()
            if x < cutoff:
                return x % bound


def sample_distinct(rng: SplitMix64, population: int, k: int) -> list[int]:
    """Draw ``k`` distinct integers from ``range(population)`` in draw order.

    Partial Fisher-Yates over a virtual array, so memory is O(k) even when
    ``population`` is ``2**m`` for large ``m``.
    """
    if k > population:
        raise ValueError(f"cannot draw {k} distinct values from {population}")
    swapped: dict[int, int] = {}
    out = []
    for i in range(k):
        j = i + rng.below(population - i)
        out.append(swapped.get(j, j))
        swapped[j] = swapped.get(i, i)
    return out
