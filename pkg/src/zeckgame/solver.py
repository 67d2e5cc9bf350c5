"""Exhaustive oracles over the game graph.

The graph of positions reachable from ``n`` 1's is a DAG (no play revisits
a position); depth-first traversal confirms this by finding no back edge,
then longest/shortest lengths and the normal-play winner fall out of one
post-order sweep.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable

from .engine import GameState, Move, apply, initial_state, legal_moves
from .strategies import greedy_seeded, simulate_tally
from .rng import derive_seed

DEFAULT_STATE_CAP = 5_000_000


class StateCapExceeded(RuntimeError):
    def __init__(self, visited: int, cap: int) -> None:
        super().__init__(f"state cap {cap} exceeded after visiting {visited} states")
        self.visited = visited


class CycleError(RuntimeError):
    """A play revisited a position."""


class Winner(enum.Enum):
    PLAYER1 = "Player1"
    PLAYER2 = "Player2"
    NONE = "None"

    def __str__(self) -> str:
        return self.value


def splitting_moves(state: GameState) -> list[Move]:
    return [m for m in legal_moves(state) if m.splitting_class]


def game_graph(
    start: GameState,
    moves: Callable[[GameState], list[Move]] = legal_moves,
    state_cap: int = DEFAULT_STATE_CAP,
) -> dict[GameState, tuple[GameState, ...]]:
    """Reachable positions mapped to their successors, in DFS post-order.

    Raises CycleError on a back edge and StateCapExceeded past ``state_cap``.
    """
    graph: dict[GameState, tuple[GameState, ...]] = {}
    on_path: set[GameState] = set()
    seen = 1
    children = tuple(apply(start, m) for m in moves(start))
    stack: list[tuple[GameState, tuple[GameState, ...], int]] = [(start, children, 0)]
    on_path.add(start)
    while stack:
        state, kids, pos = stack[-1]
        if pos == len(kids):
            stack.pop()
            on_path.discard(state)
            graph[state] = kids
            continue
        stack[-1] = (state, kids, pos + 1)
        child = kids[pos]
        if child in on_path:
            raise CycleError(f"position {child} repeats along a play from {start}")
        if child in graph:
            continue
        seen += 1
        if seen > state_cap:
            raise StateCapExceeded(seen - 1, state_cap)
        on_path.add(child)
        stack.append((child, tuple(apply(child, m) for m in moves(child)), 0))
    return graph


@dataclass(frozen=True)
class GameGraphStats:
    n: int
    longest: int
    shortest: int
    states: int
    winner: Winner


def explore(n: int, state_cap: int = DEFAULT_STATE_CAP) -> GameGraphStats:
    """Longest and shortest game, reachable-state count and winner for ``n``."""
    start = initial_state(n)
    graph = game_graph(start, state_cap=state_cap)
    longest: dict[GameState, int] = {}
    shortest: dict[GameState, int] = {}
    mover_wins: dict[GameState, bool] = {}
    for state, kids in graph.items():  # post-order: children already done
        if kids:
            longest[state] = 1 + max(longest[k] for k in kids)
            shortest[state] = 1 + min(shortest[k] for k in kids)
            mover_wins[state] = any(not mover_wins[k] for k in kids)
        else:
            longest[state] = shortest[state] = 0
            mover_wins[state] = False
    if not graph[start]:
        winner = Winner.NONE
    else:
        winner = Winner.PLAYER1 if mover_wins[start] else Winner.PLAYER2
    return GameGraphStats(n, longest[start], shortest[start], len(graph), winner)


def split_only_graph(n: int, state_cap: int = DEFAULT_STATE_CAP) -> dict[GameState, tuple[GameState, ...]]:
    """Positions reachable from ``n`` 1's using only splits and combine-1."""
    return game_graph(initial_state(n), splitting_moves, state_cap)


def split_only_feasible(n: int, state_cap: int = DEFAULT_STATE_CAP) -> bool:
    """Whether some play using only splits and combine-1 reaches the Zeckendorf form.

    Decided by exhaustive search; a dead end is a non-terminal position with
    no splitting-class move.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    graph = split_only_graph(n, state_cap)
    reaches: dict[GameState, bool] = {}
    for state, kids in graph.items():
        reaches[state] = any(reaches[k] for k in kids) if kids else not legal_moves(state)
    return reaches[initial_state(n)]


def max_gap(state: GameState) -> int:
    """Largest index difference between consecutive summands present (0 if one kind)."""
    idx = [i for i, c in enumerate(state.counts) if i and c]
    return max((b - a for a, b in zip(idx, idx[1:])), default=0)


def greedy_length_census(n: int, trials: int, seed: int) -> set[int]:
    """Distinct lengths over ``trials`` seeded greedy games on ``n``."""
    if n < 2 or trials < 1:
        raise ValueError("need n >= 2 and trials >= 1")
    start = initial_state(n)
    return {
        simulate_tally(start, greedy_seeded(derive_seed(seed, t)))[0].total
        for t in range(trials)
    }


def terminal_states(graph: dict[GameState, tuple[GameState, ...]]) -> Iterable[GameState]:
    return (s for s, kids in graph.items() if not kids)
