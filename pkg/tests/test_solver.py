import pytest

from zeckgame.engine import GameState, apply, initial_state, is_terminal, legal_moves
from zeckgame.fibzeck import fib_minus_one_index, zeckendorf
from zeckgame.solver import (
    CycleError, StateCapExceeded, Winner, explore, game_graph, greedy_length_census, max_gap,
    split_only_feasible, split_only_graph, splitting_moves,
)


def all_path_lengths(state):
    """Every play length from ``state``, by unmemoized enumeration."""
    moves = legal_moves(state)
    if not moves:
        return [0]
    return [1 + k for m in moves for k in all_path_lengths(apply(state, m))]


def mover_wins(state):
    return any(not mover_wins(apply(state, m)) for m in legal_moves(state))


def split_only_paths_exist(state):
    if is_terminal(state):
        return True
    return any(split_only_paths_exist(apply(state, m)) for m in legal_moves(state) if m.splitting_class)


@pytest.mark.parametrize("n", range(1, 13))
def test_explore_matches_path_enumeration(n):
    lengths = all_path_lengths(initial_state(n))
    s = explore(n)
    assert (s.longest, s.shortest) == (max(lengths), min(lengths))
    expected = Winner.NONE if n == 1 else (Winner.PLAYER1 if mover_wins(initial_state(n)) else Winner.PLAYER2)
    assert s.winner == expected


@pytest.mark.parametrize("n, longest, shortest, winner", [
    (4, 3, 2, Winner.PLAYER2),
    (2, 1, 1, Winner.PLAYER1),
    (1, 0, 0, Winner.NONE),
])
def test_explore_examples(n, longest, shortest, winner):
    s = explore(n)
    assert (s.longest, s.shortest, s.winner) == (longest, shortest, winner)
    assert s.shortest <= s.longest


def test_state_cap():
    with pytest.raises(StateCapExceeded) as err:
        explore(20, state_cap=10)
    assert err.value.visited == 10


def test_cycle_detection(monkeypatch):
    a, b = GameState.from_counts({1: 2}), GameState.from_counts({2: 1})
    flip = {a: b, b: a}
    # successor of each state is the other one: a two-cycle
    monkeypatch.setattr("zeckgame.solver.apply", lambda s, m: m)
    with pytest.raises(CycleError):
        game_graph(a, lambda s: [flip[s]])


@pytest.mark.parametrize("n, feasible", [(4, True), (3, False), (12, True), (1, True), (2, True), (5, False)])
def test_split_only_examples(n, feasible):
    assert split_only_feasible(n) is feasible


@pytest.mark.parametrize("n", range(2, 16))
def test_split_only_against_plain_search(n):
    assert split_only_feasible(n) == split_only_paths_exist(initial_state(n))


def test_split_only_dead_end_for_three():
    graph = split_only_graph(3)
    dead = [s for s, kids in graph.items() if not kids and not is_terminal(s)]
    assert dead == [GameState.from_counts({1: 1, 2: 1})]


def test_max_gap():
    assert max_gap(GameState.from_counts({1: 1, 5: 2})) == 4
    assert max_gap(GameState.from_counts({3: 5})) == 0


def test_splitting_moves_filter():
    s = GameState.from_counts({1: 2, 2: 2, 3: 1})
    assert all(m.splitting_class for m in splitting_moves(s))
    assert len(splitting_moves(s)) == 2


@pytest.mark.parametrize("n, lengths", [(4, {3}), (2, {1})])
def test_census_examples(n, lengths):
    assert greedy_length_census(n, 100 if n == 4 else 10, 123) == lengths


def test_census_large_singleton():
    assert len(greedy_length_census(500, 100, 2024)) == 1


@pytest.mark.parametrize("n", range(2, 31))
def test_brute_longest_vs_bound(n):
    from zeckgame.bounds import sharp_upper

    s = explore(n)
    sharp = sharp_upper(zeckendorf(n))
    assert s.longest <= sharp
    assert (s.longest == sharp) == (fib_minus_one_index(n) is not None)
