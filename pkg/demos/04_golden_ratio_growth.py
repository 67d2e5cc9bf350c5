"""
Growth of the longest game
==========================

The longest game grows like ``phi^2 * n`` with ``phi^2 = (3 + sqrt5)/2``.
For ``n = F_k - 1`` the longest game equals the sharp bound exactly.
"""

# %%
from zeckgame import QuadExact, bounds_report, fib, initial_state
from zeckgame.strategies import SPLIT_SMALLEST, simulate_tally

print(f"phi^2 = {QuadExact.PHI_SQUARED.decimal(9)}")
for k in range(6, 31, 2):
    n = fib(k) - 1
    tally, _ = simulate_tally(initial_state(n), SPLIT_SMALLEST)
    b = bounds_report(n)
    print(f"k={k:2d} n={n:8d} longest={tally.total:9d} sharp={b.sharp_upper:9d} ratio={tally.total / n:.6f}")

# %%
# Away from F_k - 1 the bound is not attained, but the ratio still climbs
# toward phi^2.
for n in (10**3, 10**4, 10**5, 10**6):
    tally, _ = simulate_tally(initial_state(n), SPLIT_SMALLEST)
    print(f"n={n:8d} longest={tally.total:9d} sharp={bounds_report(n).sharp_upper:9d} ratio={tally.total / n:.6f}")
