"""SplitMix64, the seeded generator behind randomized strategies.

SplitMix64 (Steele, Lea and Flood, 2014) is fully specified by three 64-bit
constants, so the pure-Python version here and the compiled copy in
``zeckgame._kernel`` produce identical streams on every platform.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Index in ``range(k)``; modulo bias is below 2**-58 for k < 64."""
        if k < 1:
            raise ValueError("k must be positive")
        return self.next_u64() % k


def derive_seed(seed: int, trial: int) -> int:
    """Per-trial seed: the ``trial``-th output of a SplitMix64 seeded with ``seed``."""
    rng = SplitMix64(seed)
    rng.state = (rng.state + trial * GOLDEN_GAMMA) & MASK64
    return rng.next_u64()
