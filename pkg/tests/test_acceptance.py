"""Exit criteria, one test each, at their stated ranges and tolerances.

Each test appends a PASS/FAIL line that is printed in the pytest summary.
"""

import pytest

from zeckgame.bounds import bounds_report, exact_length_identity, sharp_upper, verify_inverse_claims
from zeckgame.engine import check_accounting, initial_state
from zeckgame.fibzeck import zeckendorf
from zeckgame.rng import SplitMix64
from zeckgame.solver import Winner, explore, greedy_length_census, max_gap, split_only_feasible, split_only_graph
from zeckgame.strategies import (
    COMBINE_LARGEST, GREEDY, SPLIT_LARGEST, SPLIT_SMALLEST, greedy_seeded, simulate, simulate_tally,
)
from zeckgame.verify import random_path


def fibonacci_upto(limit):
    """F_1 = 1, F_2 = 2, ... by the recurrence, every term <= limit."""
    out, a, b = [], 1, 2
    while a <= limit:
        out.append(a)
        a, b = b, a + b
    return out


def record(log, cid, title, failures, detail=""):
    ok = not failures
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {cid:>2}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f" first failures: {failures[:3]}"
    log.append(line)
    print(line)
    assert ok, line


def test_c01_shortest_game(acceptance_log):
    bad = []
    for n in range(2, 31):
        if explore(n).shortest != n - zeckendorf(n).z:
            bad.append(("brute", n))
    for n in range(2, 10**4 + 1):
        want = n - zeckendorf(n).z
        for kind in (COMBINE_LARGEST, SPLIT_LARGEST):
            if simulate_tally(initial_state(n), kind)[0].total != want:
                bad.append((kind.name, n))
    record(acceptance_log, 1, "shortest game is n - Z(n)", bad, "brute n<=30, strategies n<=10^4")


def test_c02_longest_game(acceptance_log):
    bad = []
    for n in range(2, 31):
        longest = explore(n).longest
        ss = simulate(initial_state(n), SPLIT_SMALLEST).length
        gr = simulate(initial_state(n), GREEDY).length
        if not longest == ss == gr:
            bad.append((n, longest, ss, gr))
    record(acceptance_log, 2, "split-smallest and greedy realize the longest game", bad, "n<=30")


def test_c03_greedy_uniqueness(acceptance_log):
    bad = [n for n in range(2, 501) if len(greedy_length_census(n, 100, seed=20240601 + n)) != 1]
    record(acceptance_log, 3, "100 seeded greedy runs share one length", bad, "n<=500")


def test_c04_sharp_bound_locus(acceptance_log):
    expected = {f - 1 for f in fibonacci_upto(31)} & set(range(2, 31))
    assert expected == {2, 4, 7, 12, 20}
    bad, equal = [], set()
    for n in range(2, 31):
        longest, sharp = explore(n).longest, sharp_upper(zeckendorf(n))
        if longest > sharp:
            bad.append((n, longest, sharp))
        if longest == sharp:
            equal.add(n)
    if equal != expected:
        bad.append(("equality set", sorted(equal)))
    record(acceptance_log, 4, "longest <= sum a_i delta_i, equality exactly at n = F_k - 1", bad,
           f"equality at {sorted(equal)}")


def test_c05_split_only_characterization(acceptance_log):
    fibs = set(fibonacci_upto(60))
    bad = [n for n in range(2, 51) if split_only_feasible(n) != (n + 1 in fibs)]
    record(acceptance_log, 5, "split-only play possible iff n + 1 is Fibonacci", bad, "n<=50")


def test_c06_gap_claim(acceptance_log):
    bad = []
    for n in range(2, 51):
        worst = max(max_gap(s) for s in split_only_graph(n))
        if worst > 3:
            bad.append((n, worst))
    record(acceptance_log, 6, "split-only play never opens an index gap above 3", bad, "n<=50")


def test_c07_accounting(acceptance_log):
    bad = []
    for n in range(2, 1001):
        prof = zeckendorf(n)
        for kind in (COMBINE_LARGEST, SPLIT_LARGEST, SPLIT_SMALLEST, GREEDY, greedy_seeded(n)):
            t = simulate(initial_state(n), kind).tallies
            if not check_accounting(t, prof).ok or exact_length_identity(t, prof):
                bad.append((kind.name, n))
    for n in range(2, 21):
        prof = zeckendorf(n)
        rng = SplitMix64(n)
        for _ in range(50):
            t = random_path(n, rng).tallies
            if not check_accounting(t, prof).ok or exact_length_identity(t, prof):
                bad.append(("random", n))
    record(acceptance_log, 7, "balance equations and exact-length identity have zero residual", bad,
           "strategies n<=1000, 50 random paths n<=20")


def test_c08_matrix_claims(acceptance_log):
    bad = []
    for i_max in range(3, 41):
        rep = verify_inverse_claims(i_max)
        bad += [(i_max, c.name, c.counterexample) for c in rep.claims if not c.passed]
    record(acceptance_log, 8, "inverse first row F_{j+1} - 1 and column sums a_j", bad, "3<=i_max<=40")


def test_c09_bound_ordering(acceptance_log):
    bad = [n for n in range(2, 10**5 + 1) if not bounds_report(n).ordered]
    record(acceptance_log, 9, "lower <= sharp <= closed (exact)", bad, "n<=10^5")


def test_c10_winner(acceptance_log):
    bad = [(n, str(w)) for n in range(3, 26) if (w := explore(n).winner) != Winner.PLAYER2]
    two = explore(2).winner
    if two != Winner.PLAYER1:
        bad.append((2, str(two)))
    record(acceptance_log, 10, "Player 2 wins for 3<=n<=25", bad, f"n=2 reports {two}: single move, flagged")


def test_c11_golden_ratio_growth(acceptance_log):
    fibs = fibonacci_upto(200_000)
    n = fibs[24] - 1  # F_25 - 1
    assert n == 121392
    length = simulate(initial_state(n), SPLIT_SMALLEST).length
    ratio = length / n
    bad = [] if 2.56 <= ratio <= 2.62 else [ratio]
    record(acceptance_log, 11, "split-smallest length / n within [2.56, 2.62]", bad,
           f"n={n}, length={length}, ratio={ratio:.6f}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
