"""
Playing the Zeckendorf game
===========================

Start from ``n`` copies of 1, rewrite pairs of Fibonacci numbers, and stop
at the Zeckendorf decomposition. Whoever makes the last move wins.
"""

# %%
# States print in wedge notation; ``legal_moves`` lists every option in a
# fixed order (splits, then combine-1, then combines).
from zeckgame import apply, initial_state, legal_moves, zeckendorf

state = initial_state(6)
print("start", state)
while legal_moves(state):
    options = legal_moves(state)
    print("  options:", ", ".join(m.label for m in options))
    state = apply(state, options[-1])
    print("  ->", state)
print("Zeckendorf form of 6:", zeckendorf(6).indices(), "(indices, F_1 = 1, F_2 = 2)")

# %%
# The deterministic strategies differ only in move priority. Combine
# Largest and Split Largest finish fastest, Split Smallest and the greedy
# rule play the longest game.
from zeckgame import COMBINE_LARGEST, GREEDY, SPLIT_LARGEST, SPLIT_SMALLEST, greedy_seeded, simulate

n = 20
for kind in (COMBINE_LARGEST, SPLIT_LARGEST, SPLIT_SMALLEST, GREEDY, greedy_seeded(7)):
    trace = simulate(initial_state(n), kind)
    print(f"{str(kind):20s} length={trace.length:3d} combines={dict(trace.tallies.mc)} splits={dict(trace.tallies.ms)}")

# %%
# Traces serialize to line-delimited JSON and replay exactly.
import io

from zeckgame import read_trace, write_trace

trace = simulate(initial_state(7), SPLIT_SMALLEST)
buf = io.StringIO()
write_trace(trace, buf, "split-smallest")
print(buf.getvalue())
buf.seek(0)
assert read_trace(buf).trace == trace
