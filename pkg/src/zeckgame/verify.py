"""Property sweeps backing the ``verify`` command.

Each check walks its range in increasing ``n`` and stops at the first
failure, so a reported counterexample is the smallest one in range.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import bounds as bd
from .engine import Trace, apply, check_accounting, initial_state, is_terminal, legal_moves, read_trace, write_trace
from .fibzeck import FIB, fib_minus_one_index, zeckendorf
from .rng import SplitMix64
from .solver import explore, game_graph, greedy_length_census, max_gap, split_only_feasible, split_only_graph
from .strategies import (
    COMBINE_LARGEST, GREEDY, SPLIT_LARGEST, SPLIT_SMALLEST, Strategy, greedy_seeded, simulate, simulate_tally,
)


@dataclass(frozen=True)
class PropertyResult:
    module: str
    name: str
    passed: bool
    counterexample: int | None = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f"  counterexample n={self.counterexample}: {self.detail}"
        return f"[{status}] {self.module}.{self.name}{tail}"


def _first_bad(ns: Iterable[int], check: Callable[[int], str | None]) -> tuple[int | None, str]:
    for n in ns:
        problem = check(n)
        if problem:
            return n, problem
    return None, ""


def all_strategies(n: int, seed: int = 0) -> list[Strategy]:
    return [COMBINE_LARGEST, SPLIT_LARGEST, SPLIT_SMALLEST, GREEDY, greedy_seeded(seed + n)]


def random_path(n: int, rng: SplitMix64) -> Trace:
    """A uniformly random legal play from ``n`` 1's (uniform per move, not per path)."""
    start = state = initial_state(n)
    moves = []
    while True:
        options = legal_moves(state)
        if not options:
            return Trace.record(start, moves)
        move = options[rng.below(len(options))]
        state = apply(state, move)
        moves.append(move)


# ---------------------------------------------------------------- per-n checks

def check_decomposition(n: int) -> str | None:
    p = zeckendorf(n)
    if sum(d * FIB[i] for i, d in enumerate(p.deltas) if i) != n:
        return "summands do not add to n"
    if any(d not in (0, 1) for d in p.deltas):
        return "repeated summand"
    if any(p.deltas[i] and p.deltas[i + 1] for i in range(1, len(p.deltas) - 1)):
        return "adjacent summands"
    if not FIB[p.i_max] <= n < FIB[p.i_max + 1]:
        return "largest summand not bracketing n"
    if p.z > p.i_max or p.iz > p.i_max * (p.i_max + 1) // 2:
        return "Z or IZ out of range"
    return None


def check_state_graph(n: int) -> str | None:
    """Conservation, terminal equivalence and index ceiling over the whole game graph."""
    prof = zeckendorf(n)
    graph = game_graph(initial_state(n))  # raises CycleError on a repeated position
    for state, kids in graph.items():
        if sum(c * FIB[i] for i, c in enumerate(state.counts) if i) != n:
            return f"value not conserved at {state}"
        if is_terminal(state) != (not kids) or (not kids) != (state.counts == prof.deltas):
            return f"terminal mismatch at {state}"
        if state.top > prof.i_max:
            return f"index above i_max at {state}"
    return None


def check_strategy_traces(n: int, seed: int = 0) -> str | None:
    """Accounting residuals, exact-length identity and tally ceiling for every strategy."""
    prof = zeckendorf(n)
    for kind in all_strategies(n, seed):
        trace = simulate(initial_state(n), kind)
        rep = check_accounting(trace.tallies, prof)
        if not rep.ok:
            return f"{kind}: accounting residuals {rep.failures()}"
        if bd.exact_length_identity(trace.tallies, prof):
            return f"{kind}: exact-length residual"
        if any(i >= prof.i_max for i in [*trace.tallies.mc, *trace.tallies.ms]):
            return f"{kind}: move at index >= i_max"
    return None


def check_random_paths(n: int, paths: int = 50, seed: int = 0) -> str | None:
    prof = zeckendorf(n)
    rng = SplitMix64(seed * 1_000_003 + n)
    for _ in range(paths):
        trace = random_path(n, rng)
        if not check_accounting(trace.tallies, prof).ok:
            return f"accounting residual on {[m.label for m in trace.moves]}"
        if bd.exact_length_identity(trace.tallies, prof):
            return f"exact-length residual on {[m.label for m in trace.moves]}"
    return None


def check_shortest_sims(n: int) -> str | None:
    want = bd.lower_bound(zeckendorf(n))
    for kind in (COMBINE_LARGEST, SPLIT_LARGEST):
        got = simulate_tally(initial_state(n), kind)[0].total
        if got != want:
            return f"{kind} length {got} != n - Z(n) = {want}"
    return None


def check_oracle(n: int) -> str | None:
    stats = explore(n)
    prof = zeckendorf(n)
    if stats.shortest != n - prof.z:
        return f"brute shortest {stats.shortest} != n - Z(n) = {n - prof.z}"
    lens = {kind.name: simulate(initial_state(n), kind).length for kind in (SPLIT_SMALLEST, GREEDY)}
    if any(v != stats.longest for v in lens.values()):
        return f"brute longest {stats.longest} vs strategies {lens}"
    sharp = bd.sharp_upper(prof)
    if stats.longest > sharp:
        return f"longest {stats.longest} above sharp bound {sharp}"
    if (stats.longest == sharp) != (fib_minus_one_index(n) is not None):
        return f"longest == bound is {stats.longest == sharp} but n+1 Fibonacci is {fib_minus_one_index(n) is not None}"
    return None


def check_bound_order(n: int) -> str | None:
    rep = bd.bounds_report(n)
    return None if rep.ordered else f"lower {rep.lower}, sharp {rep.sharp_upper}, closed {rep.closed_upper}"


def check_split_only(n: int) -> str | None:
    feasible = split_only_feasible(n)
    if feasible != (fib_minus_one_index(n) is not None):
        return f"split-only feasible is {feasible}"
    worst = max(max_gap(s) for s in split_only_graph(n))
    if worst > 3:
        return f"split-only play reaches a gap of {worst}"
    return None


def check_fib_minus_one_states(n: int) -> str | None:
    for state in split_only_graph(n):
        if not is_terminal(state) and max(state.counts[1:]) < 2:
            return f"non-terminal {state} has no repeated summand"
    return None


def check_trace_roundtrip(n: int) -> str | None:
    for kind in all_strategies(n):
        trace = simulate(initial_state(n), kind)
        buf = io.StringIO()
        write_trace(trace, buf, kind.name, kind.seed)
        buf.seek(0)
        back = read_trace(buf).trace
        if back != trace or list(back.states()) != list(trace.states()):
            return f"{kind} trace does not round-trip"
    return None


# ---------------------------------------------------------------- driver

def run_all(
    max_n: int = 100_000,
    solver_max_n: int = 30,
    trials: int = 100,
    seed: int = 0,
    report: Callable[[PropertyResult], None] | None = None,
) -> list[PropertyResult]:
    """Run every property at its natural range, truncated to ``max_n`` / ``solver_max_n``."""
    cap = lambda hi: range(2, min(hi, max_n) + 1)  # noqa: E731
    brute = lambda hi: range(2, min(hi, solver_max_n, max_n) + 1)  # noqa: E731
    fib_minus_one = [FIB[k] - 1 for k in range(2, 11) if FIB[k] - 1 <= max_n]

    def census(n: int) -> str | None:
        lengths = greedy_length_census(n, trials, seed)
        return None if len(lengths) == 1 else f"greedy lengths {sorted(lengths)}"

    def winner(n: int) -> str | None:
        w = explore(n).winner.value
        return None if w == "Player2" else f"winner {w}"

    def inverse(i_max: int) -> str | None:
        rep = bd.verify_inverse_claims(i_max)
        bad = [c for c in rep.claims if not c.passed]
        return None if not bad else f"{bad[0].name} fails at {bad[0].counterexample}"

    def binet(j: int) -> str | None:
        return None if bd.coeff_a(j) <= bd.binet_bound(j) else f"a_{j} above its Binet ceiling"

    plan: list[tuple[str, str, Iterable[int], Callable[[int], str | None]]] = [
        ("fibzeck", "decomposition_valid", range(1, min(10**5, max_n) + 1), check_decomposition),
        ("engine", "state_graph_invariants", brute(30), check_state_graph),
        ("engine", "strategy_trace_accounting", cap(1000), lambda n: check_strategy_traces(n, seed)),
        ("engine", "trace_roundtrip", cap(40), check_trace_roundtrip),
        ("strategies", "shortest_game_realized", cap(10**4), check_shortest_sims),
        ("strategies", "greedy_length_unique", cap(500), census),
        ("bounds", "bound_ordering", cap(10**5), check_bound_order),
        ("bounds", "random_path_identities", brute(20), lambda n: check_random_paths(n, 50, seed)),
        ("bounds", "inverse_claims", range(3, 41), inverse),
        ("bounds", "binet_ceiling", range(1, 61), binet),
        ("solver", "oracle_agreement_and_sharpness", brute(30), check_oracle),
        ("solver", "split_only_characterization_and_gap", cap(50), check_split_only),
        ("solver", "fib_minus_one_states_have_repeat", fib_minus_one, check_fib_minus_one_states),
        ("solver", "player2_wins", range(3, min(25, solver_max_n, max_n) + 1), winner),
    ]
    results = []
    for module, name, ns, check in plan:
        n, detail = _first_bad(ns, check)
        res = PropertyResult(module, name, n is None, n, detail)
        results.append(res)
        if report:
            report(res)
    return results


def iter_lines(results: Iterable[PropertyResult]) -> Iterator[str]:
    return (r.line() for r in results)
