"""
Exhaustive search against the bounds
====================================

For small ``n`` the whole game graph fits in memory. Compare its longest and
shortest plays with ``n - Z(n)`` and with the sharp upper bound.
"""

# %%
from zeckgame import bounds_report, explore, fib_minus_one_index

print(" n  states shortest longest  lower sharp  closed      prior winner")
for n in range(2, 31):
    s = explore(n)
    b = bounds_report(n)
    mark = "*" if fib_minus_one_index(n) else " "
    print(f"{n:2d}{mark} {s.states:5d} {s.shortest:8d} {s.longest:7d} {b.lower:6d} {b.sharp_upper:5d} "
          f"{b.closed_upper.decimal(3):>8s} {b.prior_upper:8d} {s.winner}")

# %%
# Rows marked ``*`` have ``n + 1`` Fibonacci; exactly there the longest game
# meets the sharp bound. Player 2 wins every game from n = 3 on; at n = 2
# the single legal move belongs to Player 1.
