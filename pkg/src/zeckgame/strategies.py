"""Move-selection policies and the simulation driver.

Each deterministic policy is a priority list: the first available move in
the list is played. Combine-1 counts as a splitting-class move for the
greedy family.

    combine-largest   combines high->low, combine-1, splits high->low
    split-largest     splits high->low, combines high->low, combine-1
    split-smallest    splits low->high, combine-1, combines low->high
    greedy            splitting-class low->high (combine-1 first), then combines low->high
    greedy-seeded     uniform random splitting-class move, else the lowest combine
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .engine import COMBINE_1, GameState, Move, MoveTally, Trace, apply, combine_at, is_terminal, split_at
from .rng import SplitMix64

STRATEGY_NAMES = ("combine-largest", "split-largest", "split-smallest", "greedy", "greedy-seeded")


class NonTerminationError(RuntimeError):
    """A simulation exceeded its move cap."""


@dataclass(frozen=True)
class Strategy:
    name: str
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.name not in STRATEGY_NAMES:
            raise ValueError(f"unknown strategy {self.name!r}; choose from {', '.join(STRATEGY_NAMES)}")
        if self.name == "greedy-seeded" and self.seed is None:
            raise ValueError("greedy-seeded needs a seed")

    @property
    def code(self) -> int:
        return STRATEGY_NAMES.index(self.name)

    def __str__(self) -> str:
        return self.name if self.seed is None else f"{self.name}({self.seed})"


COMBINE_LARGEST = Strategy("combine-largest")
SPLIT_LARGEST = Strategy("split-largest")
SPLIT_SMALLEST = Strategy("split-smallest")
GREEDY = Strategy("greedy")


def greedy_seeded(seed: int) -> Strategy:
    return Strategy("greedy-seeded", seed)


def parse_strategy(name: str, seed: int | None = None) -> Strategy:
    if name == "greedy-seeded":
        return greedy_seeded(0 if seed is None else seed)
    return Strategy(name)


# Scans over the dense count tuple; each returns None when nothing of its kind exists.

def _split_desc(c: tuple[int, ...]) -> Move | None:
    for i in range(len(c) - 1, 1, -1):
        if c[i] >= 2:
            return split_at(i)
    return None


def _split_asc(c: tuple[int, ...]) -> Move | None:
    for i in range(2, len(c)):
        if c[i] >= 2:
            return split_at(i)
    return None


def _combine_desc(c: tuple[int, ...]) -> Move | None:
    for i in range(len(c) - 1, 1, -1):
        if c[i] and c[i - 1]:
            return combine_at(i)
    return None


def _combine_asc(c: tuple[int, ...]) -> Move | None:
    for i in range(2, len(c)):
        if c[i] and c[i - 1]:
            return combine_at(i)
    return None


def _add_ones(c: tuple[int, ...]) -> Move | None:
    return COMBINE_1 if c[1] >= 2 else None


_PRIORITIES: dict[str, tuple[Callable[[tuple[int, ...]], Move | None], ...]] = {
    "combine-largest": (_combine_desc, _add_ones, _split_desc),
    "split-largest": (_split_desc, _combine_desc, _add_ones),
    "split-smallest": (_split_asc, _add_ones, _combine_asc),
    "greedy": (_add_ones, _split_asc, _combine_asc),
}


def splitting_candidates(state: GameState) -> list[Move]:
    """Available splitting-class moves, combine-1 first then splits by index."""
    c = state.counts
    out = [COMBINE_1] if c[1] >= 2 else []
    out.extend(split_at(i) for i in range(2, len(c)) if c[i] >= 2)
    return out


def next_move(kind: Strategy, state: GameState, rng: SplitMix64 | None = None) -> Move:
    """The move ``kind`` plays at ``state``.

    For greedy-seeded the caller owns ``rng``; a fresh generator seeded from
    the strategy is used when none is passed.
    """
    c = state.counts
    if kind.name == "greedy-seeded":
        options = splitting_candidates(state)
        if options:
            rng = rng if rng is not None else SplitMix64(kind.seed)
            return options[rng.below(len(options))] if len(options) > 1 else options[0]
        move = _combine_asc(c)
    else:
        move = None
        for rule in _PRIORITIES[kind.name]:
            move = rule(c)
            if move is not None:
                break
    if move is None:
        raise ValueError(f"no move available at {state}; the state is terminal")
    return move


def move_cap(n: int) -> int:
    return 10 * n + 100


def simulate(start: GameState, kind: Strategy, cap: int | None = None) -> Trace:
    """Play ``kind`` from ``start`` until the Zeckendorf decomposition is reached."""
    cap = move_cap(start.value) if cap is None else cap
    rng = SplitMix64(kind.seed) if kind.seed is not None else None
    state = start
    moves: list[Move] = []
    while not is_terminal(state):
        if len(moves) >= cap:
            raise NonTerminationError(f"{kind} exceeded {cap} moves from {start}")
        move = next_move(kind, state, rng)
        state = apply(state, move)
        moves.append(move)
    return Trace.record(start, moves)


def simulate_tally(start: GameState, kind: Strategy, cap: int | None = None) -> tuple[MoveTally, GameState]:
    """Compiled twin of :func:`simulate` returning only the tallies and the final state."""
    from . import _kernel

    cap = move_cap(start.value) if cap is None else cap
    length, final, mc, ms = _kernel.run(start.counts, kind.code, kind.seed, cap)
    if length < 0:
        raise NonTerminationError(f"{kind} exceeded {cap} moves from {start}")
    tally = MoveTally(
        {i: int(v) for i, v in enumerate(mc) if v},
        {i: int(v) for i, v in enumerate(ms) if v},
    )
    top = int(np.flatnonzero(final).max())
    return tally, GameState.from_counts([0, *map(int, final[1 : top + 1])])
