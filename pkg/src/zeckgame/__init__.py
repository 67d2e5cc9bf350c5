"""The two-player Zeckendorf game: engine, strategies, bounds and exhaustive oracles."""

from .bounds import (
    AccountingSystem, BoundsReport, QuadExact, bounds_report, build_system, closed_upper, coeff_a,
    exact_length_identity, lower_bound, prior_upper, sharp_upper, verify_inverse_claims,
)
from .engine import (
    COMBINE_1, GameState, IllegalMoveError, Move, MoveTally, ReplayError, Trace, apply, check_accounting,
    combine_at, initial_state, is_terminal, legal_moves, read_trace, split_at, tally, write_trace,
)
from .fibzeck import ZeckendorfProfile, fib, fib_minus_one_index, zeckendorf
from .solver import GameGraphStats, Winner, explore, greedy_length_census, split_only_feasible
from .strategies import (
    COMBINE_LARGEST, GREEDY, SPLIT_LARGEST, SPLIT_SMALLEST, NonTerminationError, Strategy, greedy_seeded,
    next_move, simulate,
)

__all__ = [
    "AccountingSystem",
    "BoundsReport",
    "COMBINE_1",
    "COMBINE_LARGEST",
    "GREEDY",
    "GameGraphStats",
    "GameState",
    "IllegalMoveError",
    "Move",
    "MoveTally",
    "NonTerminationError",
    "QuadExact",
    "ReplayError",
    "SPLIT_LARGEST",
    "SPLIT_SMALLEST",
    "Strategy",
    "Trace",
    "Winner",
    "ZeckendorfProfile",
    "apply",
    "bounds_report",
    "build_system",
    "check_accounting",
    "closed_upper",
    "coeff_a",
    "combine_at",
    "exact_length_identity",
    "explore",
    "fib",
    "fib_minus_one_index",
    "greedy_length_census",
    "greedy_seeded",
    "initial_state",
    "is_terminal",
    "legal_moves",
    "lower_bound",
    "next_move",
    "prior_upper",
    "read_trace",
    "sharp_upper",
    "simulate",
    "split_at",
    "split_only_feasible",
    "tally",
    "verify_inverse_claims",
    "write_trace",
    "zeckendorf",
]

__version__ = "0.1.0"
