"""Game states, moves, traces and move accounting for the Zeckendorf game.

A state is the multiset of Fibonacci summands currently on the table, stored
as a count tuple ``counts`` with ``counts[i]`` the number of copies of
``F_i`` (slot 0 unused, trailing zeros trimmed). Two players alternate
rewriting the multiset with the moves below; the player who produces the
Zeckendorf decomposition makes the last move.

    C1     F_1 + F_1         -> F_2
    C(i)   F_{i-1} + F_i     -> F_{i+1}          (i >= 2)
    S(2)   F_2 + F_2         -> F_1 + F_3
    S(i)   F_i + F_i         -> F_{i-2} + F_{i+1} (i >= 3)
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Mapping, Sequence

from .fibzeck import FIB, ZeckendorfProfile, checked, zeckendorf

TRACE_SCHEMA = "zeck-trace/1"


class IllegalMoveError(ValueError):
    """A move was applied to a state that does not allow it."""


class ReplayError(ValueError):
    """A recorded move sequence does not replay from its start state."""

    def __init__(self, step: int, message: str) -> None:
        super().__init__(f"step {step}: {message}")
        self.step = step


# ---------------------------------------------------------------- moves

@dataclass(frozen=True, order=True)
class Move:
    kind: str  # "C1", "C" or "S"
    index: int

    def __post_init__(self) -> None:
        if self.kind == "C1":
            if self.index != 1:
                raise ValueError("combine-1 lives at index 1")
        elif self.kind in ("C", "S"):
            if self.index < 2:
                raise ValueError(f"{self.kind} moves need index >= 2, got {self.index}")
        else:
            raise ValueError(f"unknown move kind {self.kind!r}")

    @property
    def label(self) -> str:
        return "C1" if self.kind == "C1" else f"{self.kind}{self.index}"

    @property
    def splitting_class(self) -> bool:
        """Splits and combine-1 count as splitting moves for strategy purposes."""
        return self.kind != "C"

    def delta(self) -> dict[int, int]:
        """Change in counts caused by the move."""
        i = self.index
        if self.kind == "C1":
            return {1: -2, 2: 1}
        if self.kind == "C":
            return {i - 1: -1, i: -1, i + 1: 1}
        if i == 2:
            return {2: -2, 1: 1, 3: 1}
        return {i: -2, i - 2: 1, i + 1: 1}

    def __str__(self) -> str:
        if self.kind == "C1":
            return "C1: 1^2 -> 2"
        i = self.index
        if self.kind == "C":
            return f"C{i}: {FIB[i - 1]} + {FIB[i]} -> {FIB[i + 1]}"
        low = 1 if i == 2 else FIB[i - 2]
        return f"S{i}: {FIB[i]}^2 -> {low} + {FIB[i + 1]}"


COMBINE_1 = Move("C1", 1)


def combine_at(i: int) -> Move:
    return Move("C", i)


def split_at(i: int) -> Move:
    return Move("S", i)


# ---------------------------------------------------------------- states

def _trim(counts: Sequence[int]) -> tuple[int, ...]:
    end = len(counts)
    while end > 1 and counts[end - 1] == 0:
        end -= 1
    return tuple(counts[:end])


@dataclass(frozen=True)
class GameState:
    counts: tuple[int, ...]
    value: int

    @classmethod
    def from_counts(cls, counts: Mapping[int, int] | Sequence[int]) -> GameState:
        """Build a state from ``{index: count}`` or a dense sequence indexed from 1.

        A dense sequence must carry the unused slot 0 (``[0, 4]`` is four 1's).
        """
        if isinstance(counts, Mapping):
            top = max(counts, default=0)
            dense = [0] * (top + 1)
            for i, c in counts.items():
                if i < 1:
                    raise ValueError(f"summand index must be >= 1, got {i}")
                dense[i] = c
        else:
            dense = list(counts)
            if dense and dense[0] != 0:
                raise ValueError("slot 0 of a dense count sequence must be 0")
        if len(dense) > len(FIB):
            raise IndexError("summand index beyond supported Fibonacci range")
        if any(c < 0 for c in dense):
            raise ValueError("counts must be non-negative")
        value = checked(sum(c * FIB[i] for i, c in enumerate(dense) if i))
        if value < 1:
            raise ValueError("a game state needs at least one summand")
        return cls(_trim(dense or [0]), value)

    def count(self, i: int) -> int:
        return self.counts[i] if 0 < i < len(self.counts) else 0

    @property
    def top(self) -> int:
        """Largest index present."""
        return len(self.counts) - 1

    def sparse(self) -> list[list[int]]:
        return [[i, c] for i, c in enumerate(self.counts) if i and c]

    def wedge(self) -> str:
        """Render as ``{1^3 ∧ 2^2 ∧ 5}``."""
        parts = []
        for i, c in self.sparse():
            parts.append(str(FIB[i]) if c == 1 else f"{FIB[i]}^{c}")
        return "{" + " ∧ ".join(parts) + "}"

    def __str__(self) -> str:
        return self.wedge()


def initial_state(n: int) -> GameState:
    """The opening position: ``n`` copies of ``F_1``."""
    if n < 1:
        raise ValueError(f"the game needs n >= 1, got {n}")
    return GameState((0, checked(n)), n)


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves: splits ascending, then combine-1, then combines ascending."""
    c = state.counts
    top = len(c) - 1
    moves = [split_at(i) for i in range(2, top + 1) if c[i] >= 2]
    if c[1] >= 2:
        moves.append(COMBINE_1)
    moves.extend(combine_at(i) for i in range(2, top + 1) if c[i - 1] and c[i])
    return moves


def is_legal(state: GameState, move: Move) -> bool:
    return all(state.count(i) + d >= 0 for i, d in move.delta().items())


def apply(state: GameState, move: Move) -> GameState:
    """Return the state after ``move``; raises IllegalMoveError if it is not legal."""
    delta = move.delta()
    counts = list(state.counts)
    top = max(delta)
    if top >= len(counts):
        counts.extend([0] * (top + 1 - len(counts)))
    for i, d in delta.items():
        counts[i] += d
        if counts[i] < 0:
            raise IllegalMoveError(
                f"{move.label} needs {-d} of F_{i} but count[{i}]={state.count(i)}"
            )
    return GameState(_trim(counts), state.value)


def is_terminal(state: GameState) -> bool:
    return state.counts == zeckendorf(state.value).deltas


# ---------------------------------------------------------------- traces

@dataclass(frozen=True)
class MoveTally:
    mc: Mapping[int, int] = field(default_factory=dict)
    ms: Mapping[int, int] = field(default_factory=dict)

    def combines(self, i: int) -> int:
        return self.mc.get(i, 0)

    def splits(self, i: int) -> int:
        return self.ms.get(i, 0)

    @property
    def total(self) -> int:
        return sum(self.mc.values()) + sum(self.ms.values())

    @classmethod
    def from_moves(cls, moves: Iterable[Move]) -> MoveTally:
        mc: Counter[int] = Counter()
        ms: Counter[int] = Counter()
        for m in moves:
            (ms if m.kind == "S" else mc)[m.index] += 1
        return cls(dict(sorted(mc.items())), dict(sorted(ms.items())))


@dataclass(frozen=True)
class Trace:
    start: GameState
    moves: tuple[Move, ...]
    tallies: MoveTally
    length: int

    @classmethod
    def record(cls, start: GameState, moves: Sequence[Move]) -> Trace:
        return cls(start, tuple(moves), MoveTally.from_moves(moves), len(moves))

    def states(self) -> Iterator[GameState]:
        """Start state followed by the state after every move."""
        state = self.start
        yield state
        for step, move in enumerate(self.moves, 1):
            try:
                state = apply(state, move)
            except IllegalMoveError as exc:
                raise ReplayError(step, str(exc)) from None
            yield state

    @property
    def final(self) -> GameState:
        state = self.start
        for state in self.states():
            pass
        return state


def tally(trace: Trace) -> MoveTally:
    """Replay ``trace`` to a terminal state and count moves per index."""
    final = None
    for final in trace.states():
        pass
    assert final is not None
    if not is_terminal(final):
        raise ReplayError(trace.length, f"trace ends at non-terminal state {final}")
    return MoveTally.from_moves(trace.moves)


# ---------------------------------------------------------------- accounting

@dataclass(frozen=True)
class AccountingReport:
    residuals: dict[int, int]

    @property
    def ok(self) -> bool:
        return not any(self.residuals.values())

    def failures(self) -> dict[int, int]:
        return {i: r for i, r in self.residuals.items() if r}


def accounting_residual(tally: MoveTally, i: int, net: int) -> int:
    """Per-index balance for ``i >= 2``: moves creating F_i minus moves consuming it, minus ``net``.

    Combine-1 plays the role of the split at index 1; there is no combine at
    index 1 producing F_2 from F_0.
    """
    ms_prev = tally.combines(1) if i == 2 else tally.splits(i - 1)
    mc_prev = 0 if i == 2 else tally.combines(i - 1)
    return (
        ms_prev - 2 * tally.splits(i) + tally.splits(i + 2)
        + mc_prev - tally.combines(i) - tally.combines(i + 1)
        - net
    )


def check_accounting(
    tally: MoveTally, profile: ZeckendorfProfile, start: GameState | None = None
) -> AccountingReport:
    """Residuals of the per-index move balance equations; all zero for a valid game.

    With ``start`` omitted the game is assumed to open from ``n`` 1's. For
    any other start the net change ``final - start`` replaces the terminal
    counts.
    """
    start = start or initial_state(profile.n)
    if start.value != profile.n:
        raise ValueError("start state and profile disagree on n")
    residuals = {}
    residuals[1] = (
        start.count(1) - 2 * tally.combines(1) - tally.combines(2)
        + tally.splits(2) + tally.splits(3) - profile.delta(1)
    )
    for i in range(2, profile.i_max + 1):
        residuals[i] = accounting_residual(tally, i, profile.delta(i) - start.count(i))
    return AccountingReport(residuals)


# ---------------------------------------------------------------- serialization

def _sparse(mapping: Mapping[int, int]) -> list[list[int]]:
    return [[i, c] for i, c in sorted(mapping.items()) if c]


def write_trace(trace: Trace, fh: IO[str], strategy: str, seed: int | None = None) -> None:
    """Write ``trace`` as line-delimited JSON (header, one line per move, footer)."""
    header = {"schema": TRACE_SCHEMA, "n": trace.start.value, "strategy": strategy, "seed": seed}
    if trace.start != initial_state(trace.start.value):
        header["start"] = trace.start.sparse()
    fh.write(json.dumps(header) + "\n")
    for step, (move, state) in enumerate(zip(trace.moves, list(trace.states())[1:]), 1):
        rec = {"step": step, "kind": move.kind, "index": move.index, "after": state.sparse()}
        fh.write(json.dumps(rec) + "\n")
    footer = {
        "length": trace.length,
        "mc": _sparse(trace.tallies.mc),
        "ms": _sparse(trace.tallies.ms),
    }
    fh.write(json.dumps(footer) + "\n")


@dataclass(frozen=True)
class TraceFile:
    trace: Trace
    strategy: str
    seed: int | None


def read_trace(fh: IO[str]) -> TraceFile:
    """Parse and replay a trace file; every recorded ``after`` must match the replay."""
    lines = [json.loads(line) for line in fh if line.strip()]
    if not lines or lines[0].get("schema") != TRACE_SCHEMA:
        raise ValueError(f"not a {TRACE_SCHEMA} file")
    header, *body, footer = lines
    n = header["n"]
    start = (
        GameState.from_counts({i: c for i, c in header["start"]})
        if "start" in header else initial_state(n)
    )
    if start.value != n:
        raise ValueError("header start state does not sum to n")
    state = start
    moves = []
    for expected_step, rec in enumerate(body, 1):
        if rec["step"] != expected_step:
            raise ReplayError(expected_step, f"record numbered {rec['step']}")
        move = Move(rec["kind"], rec["index"])
        try:
            state = apply(state, move)
        except IllegalMoveError as exc:
            raise ReplayError(expected_step, str(exc)) from None
        if state.sparse() != rec["after"]:
            raise ReplayError(expected_step, f"replayed {state.sparse()} != recorded {rec['after']}")
        moves.append(move)
    trace = Trace.record(start, moves)
    if footer.get("length") != trace.length:
        raise ValueError(f"footer length {footer.get('length')} != {trace.length} moves")
    if footer.get("mc") != _sparse(trace.tallies.mc) or footer.get("ms") != _sparse(trace.tallies.ms):
        raise ValueError("footer tallies disagree with the replayed moves")
    return TraceFile(trace, header["strategy"], header.get("seed"))
