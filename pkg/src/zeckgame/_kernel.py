"""Compiled simulation loop for large sweeps.

Mirrors ``strategies.simulate`` move for move (including the SplitMix64
draws of greedy-seeded) but keeps only the tallies. The pure-Python driver
stays the reference; tests compare the two.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .fibzeck import MAX_INDEX
from .rng import GOLDEN_GAMMA, MIX1, MIX2

WIDTH = MAX_INDEX + 3

_GAMMA = np.uint64(GOLDEN_GAMMA)
_MIX1 = np.uint64(MIX1)
_MIX2 = np.uint64(MIX2)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)

# move codes: kind 0 = combine-1, 1 = combine at i, 2 = split at i
_C1, _C, _S = 0, 1, 2


@njit(cache=True)
def _next_u64(state):
    state[0] = state[0] + _GAMMA
    z = state[0]
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    return z ^ (z >> _S31)


@njit(cache=True)
def _choose(c, top, kind, rng, cand):
    """Return (move kind, index); kind -1 means no legal move."""
    if kind == 0:  # combine-largest
        for i in range(top, 1, -1):
            if c[i] > 0 and c[i - 1] > 0:
                return _C, i
        if c[1] >= 2:
            return _C1, 1
        for i in range(top, 1, -1):
            if c[i] >= 2:
                return _S, i
    elif kind == 1:  # split-largest
        for i in range(top, 1, -1):
            if c[i] >= 2:
                return _S, i
        for i in range(top, 1, -1):
            if c[i] > 0 and c[i - 1] > 0:
                return _C, i
        if c[1] >= 2:
            return _C1, 1
    elif kind == 2:  # split-smallest
        for i in range(2, top + 1):
            if c[i] >= 2:
                return _S, i
        if c[1] >= 2:
            return _C1, 1
        for i in range(2, top + 1):
            if c[i] > 0 and c[i - 1] > 0:
                return _C, i
    elif kind == 3:  # greedy
        if c[1] >= 2:
            return _C1, 1
        for i in range(2, top + 1):
            if c[i] >= 2:
                return _S, i
        for i in range(2, top + 1):
            if c[i] > 0 and c[i - 1] > 0:
                return _C, i
    else:  # greedy-seeded
        k = 0
        for i in range(1, top + 1):
            if c[i] >= 2:
                cand[k] = i
                k += 1
        if k > 0:
            pick = 0
            if k > 1:
                pick = np.int64(_next_u64(rng) % np.uint64(k))
            i = cand[pick]
            return (_C1, 1) if i == 1 else (_S, i)
        for i in range(2, top + 1):
            if c[i] > 0 and c[i - 1] > 0:
                return _C, i
    return -1, 0


@njit(cache=True)
def _run(counts, kind, seed, cap, mc, ms):
    c = counts.copy()
    top = 0
    for i in range(c.shape[0]):
        if c[i] > 0:
            top = i
    rng = np.empty(1, dtype=np.uint64)
    rng[0] = seed
    cand = np.empty(c.shape[0], dtype=np.int64)
    length = 0
    while True:
        mk, i = _choose(c, top, kind, rng, cand)
        if mk < 0:
            return length, c
        if length >= cap:
            return -1, c
        if mk == _C1:
            c[1] -= 2
            c[2] += 1
            mc[1] += 1
            hi = 2
        elif mk == _C:
            c[i - 1] -= 1
            c[i] -= 1
            c[i + 1] += 1
            mc[i] += 1
            hi = i + 1
        else:
            c[i] -= 2
            c[i + 1] += 1
            if i == 2:
                c[1] += 1
            else:
                c[i - 2] += 1
            ms[i] += 1
            hi = i + 1
        if hi > top:
            top = hi
        while top > 0 and c[top] == 0:
            top -= 1
        length += 1


def run(counts: tuple[int, ...], code: int, seed: int | None, cap: int):
    """Simulate from dense ``counts``; returns (length, final counts, mc, ms) arrays."""
    dense = np.zeros(WIDTH, dtype=np.int64)
    dense[: len(counts)] = counts
    mc = np.zeros(WIDTH, dtype=np.int64)
    ms = np.zeros(WIDTH, dtype=np.int64)
    seed_u = np.uint64((seed or 0) & ((1 << 64) - 1))
    length, final = _run(dense, code, seed_u, cap, mc, ms)
    return int(length), final, mc, ms
