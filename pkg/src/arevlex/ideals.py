"""Monomial ideals via minimal bases, stability predicates and staircase data.

A :class:`MonomialIdeal` is the minimal monomial basis B_J plus the ambient
variable count.  Everything derived from it (sous-escalier slices, first
expansions, reduction numbers, colength, ...) is computed combinatorially
and exactly.

Two routes to the sous-escalier coexist:

* :func:`sous_escalier` filters the full list of degree-t terms through a
  divisibility test; it works for any monomial ideal.
* ``_slices`` iterates the first-expansion recursion
  N(J)_{t+1} = E(N(J)_t) \\ B_J,t+1, valid for stable ideals and much
  faster; the test suite pins bit-for-bit agreement between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DimensionError, DomainError, StabilityError
from .terms import (
    Term,
    enumerate_terms,
    raw_cmp,
    raw_divides,
    raw_key,
    raw_max_var,
    raw_min_var,
    raw_quotient,
    term_from_json,
)


@dataclass(frozen=True, eq=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal basis, sorted increasing degrevlex."""

    n: int
    min_gens: tuple[Term, ...]

    def __post_init__(self):
        raw = tuple(g.exponents for g in self.min_gens)
        if any(len(e) != self.n for e in raw):
            raise DimensionError("generator over the wrong variable count")
        for i in range(1, len(raw)):
            if raw_cmp(raw[i - 1], raw[i]) >= 0:
                raise DomainError("generators not strictly increasing in degrevlex")
        # same-degree terms never divide each other; only test across degrees,
        # and the degree-major sort lets each scan stop at the first tie
        degs = [sum(e) for e in raw]
        for i, b in enumerate(raw):
            db = degs[i]
            for a, da in zip(raw, degs):
                if da >= db:
                    break
                if raw_divides(a, b):
                    raise DomainError(f"basis not minimal: {a} divides {b}")

    # -- plumbing ----------------------------------------------------------

    @cached_property
    def _raw(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exponents for g in self.min_gens)

    @cached_property
    def _degrees(self) -> tuple[int, ...]:
        return tuple(sum(g) for g in self._raw)

    @property
    def is_zero(self) -> bool:
        return not self.min_gens

    def max_gen_degree(self) -> int:
        if self.is_zero:
            raise DomainError("the zero ideal has no generators")
        return sum(self._raw[-1])

    def _contains_raw(self, e: tuple[int, ...]) -> bool:
        # generators are degree-major sorted: stop once they outweigh e
        d = sum(e)
        degs = self._degrees
        for i, g in enumerate(self._raw):
            if degs[i] > d:
                return False
            if raw_divides(g, e):
                return True
        return False

    def __str__(self) -> str:
        return ideal_to_text(self)

    # -- derived flags, cached per instance --------------------------------

    @cached_property
    def _quasi_stable(self) -> bool:
        # x_j^s * g / min(g) in J for some s>0  <=>  some generator divides
        # it once the x_j exponent is allowed to grow without bound.
        for g in self._raw:
            k = raw_min_var(g) if sum(g) else 0
            if not k:
                continue
            sigma = list(g)
            sigma[k - 1] -= 1
            for j in range(1, k):
                ok = False
                for h in self._raw:
                    if all(h[v] <= sigma[v] for v in range(self.n) if v != j - 1):
                        ok = True
                        break
                if not ok:
                    return False
        return True

    def _contains_same_degree(self, e: tuple[int, ...], limit: int) -> bool:
        """Membership for a term with the degree of generator index ``limit``.

        A divisor either has strictly smaller degree (so lives before the
        first generator of that degree in the sorted basis) or equals the
        term itself; the hash lookup handles the latter.
        """
        if e in self._gen_set:
            return True
        d = self._degrees[limit]
        for i, g in enumerate(self._raw):
            if self._degrees[i] >= d:
                return False
            if raw_divides(g, e):
                return True
        return False

    @cached_property
    def _gen_set(self) -> frozenset:
        return frozenset(self._raw)

    @cached_property
    def _stable(self) -> bool:
        for gi, g in enumerate(self._raw):
            if not sum(g):
                continue
            k = raw_min_var(g)
            moved = list(g)
            moved[k - 1] -= 1
            for j in range(1, k):
                moved[j - 1] += 1
                if not self._contains_same_degree(tuple(moved), gi):
                    return False
                moved[j - 1] -= 1
        return True

    @cached_property
    def _strongly_stable(self) -> bool:
        # strongly stable implies stable, so a failed stable check decides;
        # for stable ideals the cached staircase slices answer membership
        if not self._stable:
            return False
        if self.is_zero:
            return True
        outside = [frozenset(s) for s in _slices(self, self.max_gen_degree())]
        for g in self._raw:
            d = sum(g)
            for i in range(self.n):
                if not g[i]:
                    continue
                moved = list(g)
                moved[i] -= 1
                for j in range(i):
                    moved[j] += 1
                    if tuple(moved) in outside[d]:
                        return False
                    moved[j] -= 1
        return True

    @cached_property
    def _pure_power_vars(self) -> tuple[int, ...]:
        """1-based indices of variables having a pure-power generator."""
        out = []
        for j in range(self.n):
            for g in self._raw:
                if g[j] and sum(g) == g[j]:
                    out.append(j + 1)
                    break
        return tuple(out)

    @property
    def is_artinian(self) -> bool:
        return len(self._pure_power_vars) == self.n


# ---------------------------------------------------------------------------
# construction and membership


def minimalize(gens: list[Term], n: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``: divisibility-minimal, sorted basis.

    An empty generator list yields the zero ideal (empty basis); operations
    that require an Artinian ideal reject it downstream.
    """
    if not gens:
        if n is None:
            raise DimensionError("empty generator list needs an explicit n")
        return MonomialIdeal(n, ())
    nv = gens[0].nvars
    if n is not None and n != nv:
        raise DimensionError(f"generators over {nv} variables, expected {n}")
    raw = sorted({g.exponents for g in gens}, key=raw_key)
    if any(len(e) != nv for e in raw):
        raise DimensionError("mixed variable counts in generator list")
    kept: list[tuple[int, ...]] = []
    for e in raw:
        if not any(raw_divides(k, e) for k in kept):
            kept.append(e)
    return MonomialIdeal(nv, tuple(Term(e) for e in kept))


def contains(J: MonomialIdeal, tau: Term) -> bool:
    """True iff some minimal generator divides tau."""
    if tau.nvars != J.n:
        raise DimensionError(f"term over {tau.nvars} variables, ideal over {J.n}")
    return J._contains_raw(tau.exponents)


# ---------------------------------------------------------------------------
# sous-escalier and first expansion


def sous_escalier(J: MonomialIdeal, t: int) -> list[Term]:
    """N(J)_t: the degree-t terms outside J, increasing degrevlex."""
    if t < 0:
        raise DomainError("degree must be nonnegative")
    return [m for m in enumerate_terms(J.n, t) if not J._contains_raw(m.exponents)]


def _expand_slice(slice_t: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """First expansion of a sorted sous-escalier slice of a stable ideal.

    Implements the disjoint union over i = 0..n-1 of
    x_{n-i} * [tau : min(tau) >= x_{n-i}].  Each block is sorted because the
    input is, and block i precedes block i+1 in degrevlex (terms in later
    blocks have no x_{n-i'} for i' <= i), so plain concatenation is sorted.
    """
    if not slice_t:
        return []
    # minimal-variable index per term, with 0 for the constant term so it
    # lands in every block
    mvs = []
    for tau in slice_t:
        mv = 0
        for k in range(n - 1, -1, -1):
            if tau[k]:
                mv = k + 1
                break
        mvs.append(mv)
    out: list[tuple[int, ...]] = []
    for v in range(n, 0, -1):
        i = v - 1
        for tau, mv in zip(slice_t, mvs):
            if mv <= v:
                out.append(tau[:i] + (tau[i] + 1,) + tau[i + 1 :])
    return out


def _slices(J: MonomialIdeal, upto: int) -> list[list[tuple[int, ...]]]:
    """Sous-escalier slices of a stable ideal for t = 0..upto, each sorted.

    Iterates N(J)_{t+1} = E(N(J)_t) minus the degree-(t+1) minimal
    generators; agreement with the filtering route is pinned by tests.
    The computed prefix is cached on the ideal and only extended.
    """
    if not J._stable:
        raise StabilityError("expansion recursion requires a stable ideal")
    store = J.__dict__.get("_slice_store")
    if store is None:
        zero = (0,) * J.n
        store = [[] if J._contains_raw(zero) else [zero]]
        J.__dict__["_slice_store"] = store
    if len(store) <= upto:
        gens_by_degree: dict[int, set[tuple[int, ...]]] = {}
        for g in J._raw:
            gens_by_degree.setdefault(sum(g), set()).add(g)
        cur = store[-1]
        for t in range(len(store), upto + 1):
            nxt = _expand_slice(cur, J.n)
            drop = gens_by_degree.get(t)
            if drop:
                nxt = [m for m in nxt if m not in drop]
            store.append(nxt)
            cur = nxt
    return store[: upto + 1]


def first_expansion(J: MonomialIdeal, t: int) -> list[Term]:
    """E(N(J)_t) for stable J: the degree-(t+1) terms not reached from J_t."""
    if not J._stable:
        raise StabilityError("first_expansion requires a stable ideal")
    if t < 0:
        raise DomainError("degree must be nonnegative")
    slice_t = [m.exponents for m in sous_escalier(J, t)]
    return [Term(e) for e in _expand_slice(slice_t, J.n)]


# ---------------------------------------------------------------------------
# stability hierarchy and revlex predicates


def is_quasi_stable(J: MonomialIdeal) -> bool:
    return J._quasi_stable


def is_stable(J: MonomialIdeal) -> bool:
    return J._stable


def is_strongly_stable(J: MonomialIdeal) -> bool:
    return J._strongly_stable


def is_revlex_segment(terms: list[Term]) -> bool:
    """True iff the (same-degree) terms form an upward-closed degrevlex segment."""
    if not terms:
        return True
    t = terms[0].degree
    if any(m.degree != t for m in terms):
        raise DomainError("revlex segment test requires equal degrees")
    n = terms[0].nvars
    top = enumerate_terms(n, t)[-len(set(terms)):]
    return sorted(set(terms), key=Term.sort_key) == top


def is_almost_revlex(J: MonomialIdeal) -> bool:
    """True iff every same-degree term above a minimal generator lies in J.

    Almost revlex ideals are strongly stable, so anything failing the
    (cheap, generators-only) stability test is rejected outright; for
    stable J the check reduces to comparing each generator with the top of
    its sous-escalier slice.
    """
    if J.is_zero:
        return True
    if not J._stable:
        return False
    reg = J.max_gen_degree()
    slices = _slices(J, reg)
    for g in J._raw:
        sl = slices[sum(g)]
        if sl and raw_cmp(sl[-1], g) > 0:
            return False
    return True


def is_revlex_ideal(J: MonomialIdeal) -> bool:
    """True iff J_t is a revlex segment for every t up to the regularity."""
    if J.is_zero:
        return True
    if not J._stable:
        return False
    reg = J.max_gen_degree()
    slices = _slices(J, reg)
    # J_t is a segment iff N(J)_t is exactly the bottom of the degree slice.
    for t in range(reg + 1):
        bottom = [m.exponents for m in enumerate_terms(J.n, t)[: len(slices[t])]]
        if bottom != slices[t]:
            return False
    return True


# ---------------------------------------------------------------------------
# ring extension and truncation


def extend_ring(J: MonomialIdeal, m: int) -> MonomialIdeal:
    """Reinterpret the generators in m >= n variables (new variables smaller)."""
    if m < J.n:
        raise DimensionError(f"cannot shrink ring from {J.n} to {m} variables")
    pad = (0,) * (m - J.n)
    return MonomialIdeal(m, tuple(Term(g + pad) for g in J._raw))


def truncate_below(J: MonomialIdeal, t: int) -> MonomialIdeal:
    """The ideal generated by the minimal generators of degree <= t."""
    if t < 0:
        raise DomainError("truncation degree must be nonnegative")
    return MonomialIdeal(J.n, tuple(g for g in J.min_gens if g.degree <= t))


# ---------------------------------------------------------------------------
# Pommaret decomposition (stable case, where P(J) = B_J)


def pommaret_decompose(J: MonomialIdeal, tau: Term) -> tuple[Term, Term]:
    """The unique alpha in B_J, delta with tau = alpha*delta, max(delta) <= min(alpha)."""
    if not J._stable:
        raise StabilityError("Pommaret decomposition implemented for stable ideals")
    if tau.nvars != J.n:
        raise DimensionError("term over the wrong variable count")
    a, d = _pommaret_raw(J, tau.exponents)
    return Term(a), Term(d)


def _pommaret_raw(
    J: MonomialIdeal, e: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    found = None
    for g in J._raw:
        if raw_divides(g, e):
            d = raw_quotient(e, g)
            # every variable of delta is <= min(alpha) in the order,
            # i.e. the largest variable of delta has index >= min_var(alpha)
            if sum(d) == 0 or raw_max_var(d) >= raw_min_var(g):
                if found is not None:
                    raise StabilityError(
                        f"decomposition of {e} not unique; ideal not stable?"
                    )
                found = (g, d)
    if found is None:
        raise DomainError(f"term {e} is not in the ideal")
    return found


# ---------------------------------------------------------------------------
# numerical invariants


def krull_dim(J: MonomialIdeal) -> int:
    """Krull dimension of R/J for strongly stable J.

    Variables carrying a pure-power generator form a prefix x1..x_{n-delta};
    delta counts the trailing variables with no pure power in J.
    """
    if not J._strongly_stable:
        raise StabilityError("Krull dimension rule requires a strongly stable ideal")
    powered = J._pure_power_vars
    if list(powered) != list(range(1, len(powered) + 1)):
        raise StabilityError("pure-power variables do not form a prefix")
    return J.n - len(powered)


def reduction_number(J: MonomialIdeal, s: int) -> int:
    """r_s = min{t : x_{n-s}^{t+1} in J}, for strongly stable J and s >= delta."""
    delta = krull_dim(J)
    if s < delta:
        raise DomainError(f"r_{s} undefined: s < delta = {delta}")
    if s > J.n - 1:
        raise DomainError(f"r_{s} undefined: no variable x_{J.n - s}")
    v = J.n - s
    best = None
    for g in J._raw:
        if g[v - 1] and sum(g) == g[v - 1]:
            best = g[v - 1] if best is None else min(best, g[v - 1])
    assert best is not None  # guaranteed by s >= delta for strongly stable J
    return best - 1


def regularity(J: MonomialIdeal) -> int:
    """reg(J) = maximum generator degree, valid for stable ideals."""
    if not J._stable:
        raise StabilityError("max-generator-degree rule requires a stable ideal")
    return J.max_gen_degree()


def colength(J: MonomialIdeal) -> int:
    """|N(J)| = sum of the Hilbert function, for Artinian J."""
    if J.is_zero or not J.is_artinian:
        raise DomainError("colength requires an Artinian ideal")
    if J._stable:
        return sum(len(s) for s in _slices(J, J.max_gen_degree()))
    total, t = 0, 0
    while True:
        c = sum(
            1
            for m in enumerate_terms(J.n, t)
            if not J._contains_raw(m.exponents)
        )
        if c == 0 and t > 0:
            return total
        total += c
        t += 1


def border_generator_count(J: MonomialIdeal) -> int:
    """|{tau in B_J : xn divides tau}|, which is |N(J) meet (J : xn)| for stable J."""
    return sum(1 for g in J._raw if g[-1] > 0)


# ---------------------------------------------------------------------------
# text and JSON forms


def ideal_to_text(J: MonomialIdeal) -> str:
    if J.is_zero:
        return "(0)"
    return "(" + ", ".join(str(g) for g in J.min_gens) + ")"


def ideal_to_json(J: MonomialIdeal) -> dict:
    return {"vars": J.n, "generators": [list(g.exponents) for g in J.min_gens]}


def ideal_from_json(data: dict) -> MonomialIdeal:
    try:
        n = int(data["vars"])
        gens = [term_from_json(g) for g in data["generators"]]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed ideal JSON: {exc}") from exc
    if any(g.nvars != n for g in gens):
        raise DimensionError("generator length disagrees with 'vars'")
    return minimalize(gens, n)
