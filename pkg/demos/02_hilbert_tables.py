"""Hilbert functions of complete intersections: tables, differences, indices.

Reproduces the bookkeeping for the degree list (4, 5, 7, 8): the value
table, its first difference, the positivity indices c_s, the socle bounds
m_i and the peak indices, plus the structural checks (symmetry, unimodal
ranges, decreasing differences) on a small grid.
"""

from itertools import combinations_with_replacement
from math import prod

from arevlex import (
    CIProfile,
    c_index,
    check_pardue_decrease,
    check_symmetry,
    check_unimodal_ranges,
    ci_hilbert,
    ci_hilbert_oracle,
    derivative,
    pardue_truncation,
)

DEGREES = (4, 5, 7, 8)
H = ci_hilbert(DEGREES)
profile = CIProfile.of(DEGREES)

print(f"degrees {DEGREES}: m = {profile.m}, u_bar = {profile.u_bar}")
print()
width = profile.m[-1] + 2
print("t          :", *(f"{t:4d}" for t in range(width)))
print("H(t)       :", *(f"{H(t):4d}" for t in range(width)))
d1 = derivative(H, 1)
print("Delta H(t) :", *(f"{d1(t):4d}" for t in range(width)))
print()
print("positivity indices:", {f"c_{s}": c_index(H, s) for s in range(len(DEGREES))})
print("peak value H(c_1) =", H(c_index(H, 1)))
print()

print("truncated first difference for (3, 4, 4) versus the (3, 4) table:")
H344 = ci_hilbert((3, 4, 4))
print("  |Delta H|:", pardue_truncation(H344, 1).table(5))
print("  H for (3,4):", ci_hilbert((3, 4)).table(5))
print("  (equal through degree 3, different afterwards: the truncated")
print("   difference of a complete intersection table need not be one)")
print()

print("structural checks over all degree lists with n <= 4, d <= 6:")
checked = 0
for n in range(1, 5):
    for degs in combinations_with_replacement(range(2, 7), n):
        assert check_symmetry(degs)
        assert check_unimodal_ranges(degs)
        assert all(check_pardue_decrease(degs, s) for s in range(n))
        assert sum(ci_hilbert(degs).table(sum(degs))) == prod(degs)
        assert ci_hilbert(degs).same_function(ci_hilbert_oracle(degs))
        checked += 1
print(f"  {checked} degree lists: symmetric, unimodal, decreasing differences,")
print("  total mass = product of the degrees, recurrence == generating function")
