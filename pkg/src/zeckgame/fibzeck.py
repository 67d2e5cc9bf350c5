"""Fibonacci numbers and Zeckendorf decompositions.

Indexing starts at ``F_1 = 1, F_2 = 2`` so that every positive integer has a
unique decomposition into distinct, non-adjacent terms:

    index        1  2  3  4  5   6   7   8
    this module  1  2  3  5  8  13  21  34
    classical    1  1  2  3  5   8  13  21   (classical F_{i+1} == F_i here)

Count sequences (``deltas``) are dense tuples indexed from 1; slot 0 is
always 0 and never read.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_INDEX = 90
INT64_MAX = 2**63 - 1


def _fib_table() -> tuple[int, ...]:
    table = [0, 1, 2]
    while len(table) <= MAX_INDEX:
        table.append(table[-1] + table[-2])
    assert table[MAX_INDEX] <= INT64_MAX
    return tuple(table)


FIB = _fib_table()


def fib(i: int) -> int:
    """Return ``F_i`` (``F_1 = 1``, ``F_2 = 2``) for ``1 <= i <= 90``."""
    if not 1 <= i <= MAX_INDEX:
        raise IndexError(f"Fibonacci index {i} outside supported range 1..{MAX_INDEX}")
    return FIB[i]


def checked(value: int) -> int:
    """Raise OverflowError if ``value`` does not fit a signed 64-bit integer."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{value} exceeds 64-bit range")
    return value


def largest_index(n: int) -> int:
    """Largest ``i`` with ``F_i <= n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    checked(n)
    i = 1
    while i < MAX_INDEX and FIB[i + 1] <= n:
        i += 1
    return i


@dataclass(frozen=True)
class ZeckendorfProfile:
    n: int
    deltas: tuple[int, ...]
    z: int
    iz: int
    i_max: int

    def delta(self, i: int) -> int:
        return self.deltas[i] if 0 < i < len(self.deltas) else 0

    def indices(self) -> list[int]:
        """Indices of the summands, ascending."""
        return [i for i in range(1, len(self.deltas)) if self.deltas[i]]


@lru_cache(maxsize=4096)
def zeckendorf(n: int) -> ZeckendorfProfile:
    """Greedy (largest summand first) Zeckendorf decomposition of ``n``."""
    if n < 1:
        raise ValueError(f"Zeckendorf decomposition needs n >= 1, got {n}")
    i_max = largest_index(n)
    deltas = [0] * (i_max + 1)
    rest = n
    i = i_max
    while rest:
        if FIB[i] <= rest:
            deltas[i] = 1
            rest -= FIB[i]
            i -= 2
        else:
            i -= 1
    z = sum(deltas)
    iz = sum(i * d for i, d in enumerate(deltas))
    return ZeckendorfProfile(n=n, deltas=tuple(deltas), z=z, iz=iz, i_max=i_max)


def fib_minus_one_index(n: int) -> int | None:
    """Return ``k >= 2`` with ``n + 1 == F_k``, or None."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for k in range(2, MAX_INDEX + 1):
        if FIB[k] == n + 1:
            return k
        if FIB[k] > n + 1:
            return None
    return None
