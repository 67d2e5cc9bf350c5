"""
Games without combining moves
=============================

A game can be finished using only splits and combine-1 exactly when
``n + 1`` is a Fibonacci number. Along any such play no two neighbouring
summands sit more than three indices apart.
"""

# %%
from zeckgame import fib_minus_one_index, split_only_feasible
from zeckgame.solver import max_gap, split_only_graph

feasible = [n for n in range(2, 51) if split_only_feasible(n)]
print("split-only feasible:", feasible)
print("n with n + 1 Fibonacci:", [n for n in range(2, 51) if fib_minus_one_index(n)])

# %%
for n in (7, 12, 20, 33):
    graph = split_only_graph(n)
    print(f"n={n}: {len(graph)} split-only positions, widest gap {max(max_gap(s) for s in graph)}")

# %%
# For n = 3 the split-only search dead-ends at {1 ∧ 2}: only a combine can
# finish the game.
print([str(s) for s, kids in split_only_graph(3).items() if not kids])
