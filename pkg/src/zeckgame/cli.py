"""Command line: ``zeckgame {simulate,bounds,solve,verify,table,play}``.

Exit codes: 0 success, 2 bad arguments, 3 invariant or verification
failure, 4 state cap exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Callable, Sequence, TextIO

from . import bounds as bd
from .engine import apply, check_accounting, initial_state, is_terminal, legal_moves, write_trace
from .fibzeck import fib_minus_one_index, zeckendorf
from .rng import SplitMix64
from .solver import DEFAULT_STATE_CAP, StateCapExceeded, explore, split_only_feasible
from .strategies import (
    COMBINE_LARGEST, GREEDY, SPLIT_LARGEST, SPLIT_SMALLEST, STRATEGY_NAMES, next_move, parse_strategy, simulate,
)
from .verify import run_all

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT, EXIT_CAP = 0, 2, 3, 4

TABLE_COLUMNS = (
    "n", "z", "iz", "i_max", "lower",
    "len_combine_largest", "len_split_largest", "len_split_smallest", "len_greedy",
    "brute_shortest", "brute_longest", "sharp_upper", "closed_upper_decimal", "prior_upper",
    "winner", "split_only", "is_fib_minus_one",
)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return value


def _sparse(m: dict[int, int]) -> str:
    return ",".join(f"{i}:{c}" for i, c in sorted(m.items())) or "-"


def closed_text(value: bd.QuadExact) -> str:
    return str(value) if value.q == 0 else f"{value}≈{value.decimal()}"


# ---------------------------------------------------------------- commands

def cmd_simulate(args: argparse.Namespace, out: TextIO) -> int:
    kind = parse_strategy(args.strategy, args.seed)
    trace = simulate(initial_state(args.n), kind)
    prof = zeckendorf(args.n)
    print(f"length={trace.length}", file=out)
    print(f"mc={_sparse(dict(trace.tallies.mc))} ms={_sparse(dict(trace.tallies.ms))}", file=out)
    if args.trace_out:
        with open(args.trace_out, "w", encoding="utf-8") as fh:
            write_trace(trace, fh, kind.name, kind.seed)
    rep = check_accounting(trace.tallies, prof)
    if not rep.ok or bd.exact_length_identity(trace.tallies, prof):
        print(f"invariant violation: accounting residuals {rep.failures()}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, out: TextIO) -> int:
    r = bd.bounds_report(args.n)
    print(f"lower={r.lower} sharp={r.sharp_upper} closed={closed_text(r.closed_upper)} prior={r.prior_upper}", file=out)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    try:
        s = explore(args.n, args.state_cap)
    except StateCapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CAP
    print(f"longest={s.longest} shortest={s.shortest} winner={s.winner} states={s.states}", file=out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    try:
        results = run_all(
            args.max_n, args.solver_max_n, args.trials, args.seed,
            report=lambda r: print(r.line(), file=out, flush=True),
        )
    except StateCapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CAP
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} properties passed", file=out)
    return EXIT_INVARIANT if failed else EXIT_OK


def table_rows(max_n: int, solver_max_n: int) -> list[list[str]]:
    rows = []
    for n in range(1, max_n + 1):
        prof = zeckendorf(n)
        start = initial_state(n)
        lens = [simulate(start, k).length for k in (COMBINE_LARGEST, SPLIT_LARGEST, SPLIT_SMALLEST, GREEDY)]
        if n <= solver_max_n:
            s = explore(n)
            brute = [s.shortest, s.longest]
            winner = str(s.winner)
            split_only = "true" if split_only_feasible(n) else "false"
        else:
            brute, winner, split_only = ["", ""], "", ""
        rows.append([str(x) for x in (
            n, prof.z, prof.iz, prof.i_max, bd.lower_bound(prof), *lens, *brute,
            bd.sharp_upper(prof), bd.closed_upper(prof).decimal(), bd.prior_upper(prof),
            winner, split_only, "true" if fib_minus_one_index(n) else "false",
        )])
    return rows


def cmd_table(args: argparse.Namespace, out: TextIO) -> int:
    try:
        rows = table_rows(args.max_n, args.solver_max_n)
    except StateCapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CAP
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    writer.writerows(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return EXIT_OK


def play(
    n: int,
    opponent: str,
    human_first: bool,
    seed: int | None = None,
    read: Callable[[str], str] = input,
    out: TextIO = sys.stdout,
) -> int:
    """Interactive game against a strategy; whoever moves last wins."""
    kind = parse_strategy(opponent, seed)
    rng = SplitMix64(kind.seed) if kind.seed is not None else None
    state = initial_state(n)
    human_turn = human_first
    player = 1
    last = None
    while not is_terminal(state):
        print(f"\nPlayer {player} ({'you' if human_turn else kind.name}) to move at {state}", file=out)
        moves = legal_moves(state)
        if human_turn:
            for k, m in enumerate(moves, 1):
                print(f"  {k}. {m}", file=out)
            while True:
                try:
                    raw = read(f"choose 1-{len(moves)}: ")
                except EOFError:
                    print("\ngame abandoned", file=out)
                    return EXIT_OK
                raw = raw.strip()
                if raw.isdigit() and 1 <= int(raw) <= len(moves):
                    move = moves[int(raw) - 1]
                    break
                print(f"  enter a number between 1 and {len(moves)}", file=out)
        else:
            move = next_move(kind, state, rng)
            print(f"  plays {move}", file=out)
        state = apply(state, move)
        last = (player, human_turn)
        human_turn = not human_turn
        player = 3 - player
    print(f"\nfinal position {state}", file=out)
    if last is None:
        print("the start is already the Zeckendorf decomposition; nobody moves", file=out)
    else:
        who, was_human = last
        print(f"Player {who} ({'you' if was_human else kind.name}) moved last and wins", file=out)
    return EXIT_OK


def cmd_play(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 2:
        print("play needs n >= 2", file=sys.stderr)
        return EXIT_USAGE
    return play(args.n, args.opponent, not args.human_second, args.seed, out=out)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zeckgame", description="Two-player Zeckendorf game toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="play one strategy game")
    p.add_argument("n", type=positive_int)
    p.add_argument("--strategy", choices=STRATEGY_NAMES, default="split-smallest")
    p.add_argument("--seed", type=int, default=None, help="seed for greedy-seeded (default 0)")
    p.add_argument("--trace-out", default=None, help="write the trace as line-delimited JSON")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bounds", help="lower and upper bounds on game length")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", help="exhaustive search of the game graph")
    p.add_argument("n", type=positive_int)
    p.add_argument("--state-cap", type=positive_int, default=DEFAULT_STATE_CAP)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run every invariant sweep")
    p.add_argument("--max-n", type=positive_int, default=100_000)
    p.add_argument("--solver-max-n", type=positive_int, default=30)
    p.add_argument("--trials", type=positive_int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="CSV of lengths and bounds per n")
    p.add_argument("--max-n", type=positive_int, default=30)
    p.add_argument("--solver-max-n", type=positive_int, default=30)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("play", help="play against a strategy in the terminal")
    p.add_argument("n", type=positive_int)
    p.add_argument("--opponent", choices=STRATEGY_NAMES, default="greedy")
    p.add_argument("--seed", type=int, default=None)
    order = p.add_mutually_exclusive_group()
    order.add_argument("--human-first", action="store_true", default=True)
    order.add_argument("--human-second", action="store_true")
    p.set_defaults(func=cmd_play)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
