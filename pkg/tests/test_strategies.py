import pytest

from zeckgame.engine import COMBINE_1, GameState, combine_at, initial_state, split_at
from zeckgame.fibzeck import zeckendorf
from zeckgame.rng import SplitMix64, derive_seed
from zeckgame.strategies import (
    COMBINE_LARGEST, GREEDY, SPLIT_LARGEST, SPLIT_SMALLEST, NonTerminationError, Strategy, greedy_seeded,
    next_move, parse_strategy, simulate, simulate_tally, splitting_candidates,
)


def st(**counts):
    return GameState.from_counts({int(k[1:]): v for k, v in counts.items()})


def test_splitmix64_reference_vector():
    # published first outputs for seed 1234567
    rng = SplitMix64(1234567)
    assert rng.next_u64() == 6457827717110365317
    assert rng.next_u64() == 3203168211198807973


def test_derive_seed_distinct():
    assert len({derive_seed(7, t) for t in range(1000)}) == 1000


@pytest.mark.parametrize("kind, s, move", [
    (SPLIT_SMALLEST, st(c1=2, c2=2), split_at(2)),
    (COMBINE_LARGEST, st(c1=2, c2=1), combine_at(2)),
    (GREEDY, st(c1=1, c2=1), combine_at(2)),
    (GREEDY, st(c1=2, c2=2), COMBINE_1),
    (GREEDY, st(c1=1, c2=2, c4=2), split_at(2)),
    (SPLIT_SMALLEST, st(c1=2, c2=1, c3=1), COMBINE_1),
    (SPLIT_SMALLEST, st(c1=1, c2=1, c3=1), combine_at(2)),
    (SPLIT_LARGEST, st(c1=2, c2=2, c3=2), split_at(3)),
    (SPLIT_LARGEST, st(c1=2, c2=1, c3=1), combine_at(3)),
    (SPLIT_LARGEST, st(c1=3), COMBINE_1),
    (COMBINE_LARGEST, st(c1=1, c2=1, c3=1), combine_at(3)),
    (COMBINE_LARGEST, st(c1=2, c3=2), COMBINE_1),
    (COMBINE_LARGEST, st(c1=1, c3=2, c5=2), split_at(5)),
])
def test_priorities(kind, s, move):
    assert next_move(kind, s) == move


def test_terminal_has_no_next_move():
    with pytest.raises(ValueError):
        next_move(GREEDY, initial_state(1))


def test_seeded_chooses_only_splitting_class():
    s = st(c1=2, c2=2, c4=2, c5=1)
    seen = {next_move(greedy_seeded(seed), s) for seed in range(200)}
    assert seen == set(splitting_candidates(s)) == {COMBINE_1, split_at(2), split_at(4)}
    assert next_move(greedy_seeded(3), st(c1=1, c2=1, c3=1)) == combine_at(2)


def test_strategy_names():
    assert parse_strategy("greedy-seeded", 9) == greedy_seeded(9)
    assert parse_strategy("greedy") == GREEDY
    with pytest.raises(ValueError):
        Strategy("split-middle")
    with pytest.raises(ValueError):
        Strategy("greedy-seeded")


@pytest.mark.parametrize("kind, n, length", [
    (SPLIT_SMALLEST, 4, 3),
    (COMBINE_LARGEST, 4, 2),
    (SPLIT_SMALLEST, 2, 1),
    (GREEDY, 1, 0),
])
def test_simulate_examples(kind, n, length):
    assert simulate(initial_state(n), kind).length == length


def test_seeded_runs_reproducible():
    a = simulate(initial_state(200), greedy_seeded(11))
    b = simulate(initial_state(200), greedy_seeded(11))
    assert a == b
    c = simulate(initial_state(200), greedy_seeded(12))
    assert c.moves != a.moves and c.length == a.length


def test_cap_fires():
    with pytest.raises(NonTerminationError):
        simulate(initial_state(50), SPLIT_SMALLEST, cap=10)
    with pytest.raises(NonTerminationError):
        simulate_tally(initial_state(50), SPLIT_SMALLEST, cap=10)


@pytest.mark.parametrize("n", list(range(1, 120)) + [377, 1000, 2583])
def test_compiled_driver_matches_reference(n):
    for kind in (COMBINE_LARGEST, SPLIT_LARGEST, SPLIT_SMALLEST, GREEDY, greedy_seeded(n), greedy_seeded(2**64 - n)):
        trace = simulate(initial_state(n), kind)
        tal, final = simulate_tally(initial_state(n), kind)
        assert tal == trace.tallies
        assert final == trace.final


def test_compiled_driver_custom_start():
    start = st(c1=5, c2=3, c4=2, c6=1)
    for kind in (COMBINE_LARGEST, SPLIT_LARGEST, SPLIT_SMALLEST, GREEDY, greedy_seeded(4)):
        tal, final = simulate_tally(start, kind)
        trace = simulate(start, kind)
        assert tal == trace.tallies and final == trace.final
        assert final.counts == zeckendorf(start.value).deltas


@pytest.mark.parametrize("n", range(2, 300))
def test_shortest_strategies_hit_lower_bound(n):
    want = n - zeckendorf(n).z
    assert simulate(initial_state(n), COMBINE_LARGEST).length == want
    assert simulate(initial_state(n), SPLIT_LARGEST).length == want


@pytest.mark.parametrize("n", range(2, 150))
def test_longest_strategies_agree(n):
    lengths = {simulate(initial_state(n), k).length for k in (SPLIT_SMALLEST, GREEDY, greedy_seeded(n))}
    assert len(lengths) == 1
