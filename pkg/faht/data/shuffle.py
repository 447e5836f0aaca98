# faht/data/shuffle.py
"""Reproducible Fisher-Yates shuffling with a pinned PRNG.

The generator is xoshiro256** seeded through SplitMix64; bounded integers
are drawn by rejection so every permutation is equally likely and the
result is the same on every platform.
"""

from typing import List, MutableSequence, Sequence, TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


class Xoshiro256StarStar:
    """64-bit generator; state words come from SplitMix64(seed)."""

    def __init__(self, seed: int):
        mixer = SplitMix64(seed)
        self.s = [mixer.next() for _ in range(4)]

    def next(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        threshold = ((1 << 64) - bound) % bound
        while True:
            r = self.next()
            if r >= threshold:
                return r % bound


def fisher_yates(items: MutableSequence[T], seed: int) -> MutableSequence[T]:
    """Shuffle ``items`` in place; swaps i with j drawn from [0, i]."""
    rng = Xoshiro256StarStar(seed)
    for i in range(len(items) - 1, 0, -1):
        j = rng.below(i + 1)
        items[i], items[j] = items[j], items[i]
    return items


def shuffled(items: Sequence[T], seed: int) -> List[T]:
    return fisher_yates(list(items), seed)
