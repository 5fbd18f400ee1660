"""Full symbolic reduction of marked polynomials; audit oracle for the tangent rows.

This module re-derives the tangent-space equations without the linear
truncation: each x_j * f_gamma is rewritten by the head decompositions
until its support lies outside J, with coefficients tracked as honest
polynomials in the parameters.  The degree-one slice of every remainder
coefficient must span the same row space as the direct linearization; the
acceptance suite checks that on every small Artinian stable ideal.

Coefficient polynomials are dicts mapping a sorted tuple of parameter ids
(a monomial in the C variables) to an integer.
"""

from __future__ import annotations

from bisect import insort

from .errors import DomainError
from .ideals import MonomialIdeal, _pommaret_raw
from .linalg import row_space_equal
from .tangent import _full_sous_raw, _linear_rows, _require_artinian_stable
from .terms import raw_key, raw_min_var, raw_mul, raw_var

CPoly = dict  # tuple[int, ...] -> int


def _add_term(poly: CPoly, mono: tuple[int, ...], coeff: int):
    c = poly.get(mono, 0) + coeff
    if c:
        poly[mono] = c
    else:
        poly.pop(mono, None)


def _mul_param(poly: CPoly, pid: int, sign: int) -> CPoly:
    out: CPoly = {}
    for mono, c in poly.items():
        lst = list(mono)
        insort(lst, pid)
        out[tuple(lst)] = sign * c
    return out


def full_reduce(J: MonomialIdeal, gi: int, j: int, sous=None, col=None) -> dict:
    """Remainder of x_j * f_{gens[gi]} as {x-monomial: coefficient polynomial}.

    The rewriting loop always eliminates the degrevlex-greatest monomial
    still inside J, which makes the run deterministic; the remainder itself
    is unique whatever the strategy.
    """
    gens = J._raw
    if sous is None:
        _require_artinian_stable(J)
        sous = _full_sous_raw(J)
    sset = set(sous)
    if col is None:
        col = {(a, b): i for i, (a, b) in enumerate(
            (a, b) for a in range(len(gens)) for b in sous
        )}
    gidx = {g: i for i, g in enumerate(gens)}
    g = gens[gi]
    xj = raw_var(J.n, j)

    poly: dict[tuple[int, ...], CPoly] = {raw_mul(xj, g): {(): 1}}
    for b in sous:
        _add_term(poly.setdefault(raw_mul(xj, b), {}), (col[(gi, b)],), 1)

    while True:
        inside = [m for m, c in poly.items() if c and m not in sset]
        if not inside:
            break
        target = max(inside, key=raw_key)
        coeff = poly.pop(target)
        alpha, delta = _pommaret_raw(J, target)
        ai = gidx[alpha]
        # subtract coeff * x^delta * f_alpha; the head cancels target exactly
        for b in sous:
            m = raw_mul(delta, b)
            dest = poly.setdefault(m, {})
            for mono, c in _mul_param(coeff, col[(ai, b)], -1).items():
                _add_term(dest, mono, c)
    remainder = {m: c for m, c in poly.items() if c}
    for c in remainder.values():
        if () in c:
            raise DomainError("remainder has a constant coefficient; not a flat point")
    return remainder


def oracle_rows(J: MonomialIdeal):
    """Degree-one slices of all remainder coefficients, as sparse rows."""
    _require_artinian_stable(J)
    gens = J._raw
    sous = _full_sous_raw(J)
    col = {}
    for a in range(len(gens)):
        for b in sous:
            col[(a, b)] = len(col)
    rows = []
    for gi, g in enumerate(gens):
        k = raw_min_var(g)
        for j in range(1, k):
            remainder = full_reduce(J, gi, j, sous, col)
            for m in sorted(remainder, key=raw_key):
                lin = {mono[0]: c for mono, c in remainder[m].items() if len(mono) == 1}
                if lin:
                    rows.append(lin)
    return rows, len(col)


def audit_tangent(J: MonomialIdeal) -> bool:
    """True iff the truncated linearization spans the oracle's row space."""
    rows_fast, n_fast, _ = _linear_rows(J)
    rows_full, n_full = oracle_rows(J)
    if n_fast != n_full:
        return False
    return row_space_equal(rows_fast, rows_full)
