"""Shared brute-force oracles and ideal generators for the test suite.

Everything here recomputes library results from definitions, as literally
as possible, so the fast implementations are checked against independent
code paths.
"""

from __future__ import annotations

import itertools
from math import prod

from arevlex import MonomialIdeal, Term, contains, enumerate_terms, minimalize
from arevlex.terms import raw_key


def brute_first_expansion(J: MonomialIdeal, t: int) -> list[Term]:
    """T_{t+1} minus {x_i * sigma : sigma in J_t}, straight from the definition."""
    n = J.n
    ideal_t = [m for m in enumerate_terms(n, t) if contains(J, m)]
    forbidden = set()
    for sigma in ideal_t:
        for j in range(1, n + 1):
            e = list(sigma.exponents)
            e[j - 1] += 1
            forbidden.add(tuple(e))
    return [m for m in enumerate_terms(n, t + 1) if m.exponents not in forbidden]


def brute_is_almost_revlex(J: MonomialIdeal) -> bool:
    for g in J.min_gens:
        for m in enumerate_terms(J.n, g.degree):
            if m > g and not contains(J, m):
                return False
    return True


def brute_pommaret_candidates(J: MonomialIdeal, tau: Term):
    """All (alpha, delta) splittings of tau satisfying the multiplicative-variable rule."""
    out = []
    for g in J.min_gens:
        if g.divides(tau):
            delta = tau.quotient(g)
            if delta.degree == 0 or delta.max_var() >= g.min_var():
                out.append((g, delta))
    return out


def order_ideals(n: int, max_size: int):
    """All downward-closed exponent sets of size 1..max_size in n variables."""
    frontier = {frozenset([(0,) * n])}
    yield from frontier
    for _ in range(2, max_size + 1):
        nxt = set()
        for S in frontier:
            cands = set()
            for m in S:
                for i in range(n):
                    mm = list(m)
                    mm[i] += 1
                    mm = tuple(mm)
                    if mm not in S:
                        cands.add(mm)
            for c in cands:
                if all(
                    tuple(c[k] - (1 if k == i else 0) for k in range(n)) in S
                    for i in range(n)
                    if c[i]
                ):
                    nxt.add(S | {c})
        frontier = nxt
        yield from frontier


def ideal_with_staircase(S, n: int) -> MonomialIdeal:
    """The monomial ideal whose sous-escalier is the order ideal S."""
    gens = set()
    for m in S:
        for i in range(n):
            mm = list(m)
            mm[i] += 1
            mm = tuple(mm)
            if mm not in S:
                gens.add(mm)
    return minimalize([Term(g) for g in sorted(gens, key=raw_key)], n)


def artinian_stable_ideals(max_vars: int, max_colength: int):
    """Every Artinian stable ideal with n <= max_vars and colength <= max_colength."""
    from arevlex import is_stable

    out = []
    for n in range(1, max_vars + 1):
        for S in order_ideals(n, max_colength):
            J = ideal_with_staircase(S, n)
            if not J.is_zero and is_stable(J):
                out.append(J)
    return out


def borel_closure(e: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All terms obtained by repeatedly moving one exponent to a larger variable."""
    seen = {e}
    stack = [e]
    while stack:
        cur = stack.pop()
        for i in range(len(e)):
            if not cur[i]:
                continue
            for j in range(i):
                m = list(cur)
                m[i] -= 1
                m[j] += 1
                m = tuple(m)
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
    return seen


def random_strongly_stable(rng, n: int, socle: int, extras: int = 2) -> MonomialIdeal:
    """A random Artinian strongly stable ideal: m^socle plus a few Borel closures."""
    gens = {tuple(e.exponents) for e in enumerate_terms(n, socle)}
    for _ in range(extras):
        d = rng.randint(1, socle - 1) if socle > 1 else 1
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        gens |= borel_closure(tuple(e))
    return minimalize([Term(g) for g in sorted(gens, key=raw_key)], n)


def ci_degree_grid(max_vars: int, d_lo: int, d_hi: int, max_product: int):
    """Non-decreasing degree lists with bounded product, smallest first."""
    for n in range(1, max_vars + 1):
        for degs in itertools.combinations_with_replacement(range(d_lo, d_hi + 1), n):
            if prod(degs) <= max_product:
                yield degs


# fixed ideals used across the suite: two strongly stable ideals sharing the
# Hilbert function 1,3,6,6,5,5,... of a degree-5 space curve section
CURVE_GENS = [(3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 2)]
CURVE_ALT_GENS = [(3, 0, 0), (2, 1, 0), (1, 2, 0), (2, 0, 1), (0, 3, 1), (0, 4, 0)]


def curve_ideal() -> MonomialIdeal:
    return minimalize([Term(e) for e in CURVE_GENS])


def curve_ideal_alt() -> MonomialIdeal:
    return minimalize([Term(e) for e in CURVE_ALT_GENS])
