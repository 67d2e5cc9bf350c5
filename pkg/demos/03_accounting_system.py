"""
The move-accounting linear system
=================================

Balancing how many copies of each ``F_i`` are created and consumed gives a
linear system in the move counts. Its square block is unit upper-triangular,
and its inverse has Fibonacci entries.
"""

# %%
import numpy as np

from zeckgame import build_system, coeff_a, initial_state, simulate, verify_inverse_claims, zeckendorf
from zeckgame.strategies import COMBINE_LARGEST

system = build_system(6)
print("M =\n", system.m_matrix)

# %%
report = verify_inverse_claims(6)
print("A^-1 =\n", report.inverse)
print("column sums with a leading 0:", [0, *report.inverse.sum(axis=0).tolist()])
print("a_j = F_{j+2} - j - 2:       ", [coeff_a(j) for j in range(1, 7)])
for claim in report.claims:
    print(f"  {claim.name:12s} {'ok' if claim.passed else claim.counterexample}")

# %%
# Any finished game satisfies the system. Combining moves above index 1
# shorten the game by (i - 1) each relative to the bound.
n = 12
prof = zeckendorf(n)
trace = simulate(initial_state(n), COMBINE_LARGEST)
s = build_system(prof.i_max)
x = s.unknowns(trace.tallies)
print("M x =", s.m_matrix @ x, " delta =", s.rhs(prof))
penalty = sum((i - 1) * c for i, c in trace.tallies.mc.items() if i >= 2)
print(f"length {trace.length} = bound {sum(coeff_a(i) for i in prof.indices())} - {penalty}")
assert np.array_equal(s.m_matrix @ x, s.rhs(prof))
