"""Singularity certificates on punctual Hilbert schemes.

For each degree list, the point of the Hilbert scheme given by the almost
revlex ideal is tested against the dimension n*D of the component through
the lexicographic point.  Cheap numeric criteria are tried first; when
they are inconclusive the exact tangent-space dimension decides, computed
from the rank of the linearized marked-polynomial reduction.
"""

from math import prod

from arevlex import almost_revlex_ci, classify_ci, classify_stable, tangent_dim

print("classification cascade (numeric first, exact tangent as fallback):")
for degs in [(2, 2, 2), (3, 3, 3), (4, 4, 4), (5, 5, 5), (3, 4, 4),
             (2, 2, 2, 2), (2, 2, 2, 2, 2), (5, 5, 5, 5, 5), (8, 8, 8, 8)]:
    v = classify_ci(degs, exact=prod(degs) <= 200)
    witness = ", ".join(f"{k}={val}" for k, val in sorted(v.witness.items()))
    print(f"  {str(degs):18s} -> {v.verdict:8s} via {v.criterion} ({witness})")

print()
print("exact tangent dimensions versus the lex-component dimension n*D:")
for degs in [(2, 2, 2), (3, 3, 3), (3, 4, 4)]:
    J = almost_revlex_ci(len(degs), degs)
    rep = tangent_dim(J)
    print(f"  {str(degs):10s}: dim T = {rep.tangent_dim:4d}  >  n*D = {rep.lex_dim:4d}"
          f"   (parameters {rep.param_count}, rank {rep.rank},"
          f" bounds [{rep.lower_bound}, {rep.upper_bound}])")

print()
print("the sufficient lower-bound test alone (no rank computation):")
for degs in [(2, 2, 2), (3, 4, 4), (2, 2, 2, 2), (2, 2, 2, 2, 2)]:
    J = almost_revlex_ci(len(degs), degs)
    v = classify_stable(J)
    print(f"  {str(degs):14s}: lower bound {v.witness['lower']:4d} vs n*D ="
          f" {v.witness['lex_dim']:4d} -> {v.verdict}")
print()
print("note: 'unknown' never claims smoothness; the tests are sufficient only")
