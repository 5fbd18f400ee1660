"""Tangent space to the punctual Hilbert scheme at an Artinian stable ideal.

Every generator gamma of J carries a marked polynomial: the head term
x^gamma plus one parameter C[gamma, beta] for each sous-escalier term beta.
Multiplying by a variable above min(gamma) and rewriting by the unique
head decomposition leaves a remainder supported outside J; the degree-one
part of its coefficients is assembled here directly:

* +C[gamma, beta] on the monomial x_j*beta whenever x_j*beta stays outside J,
* -C[alpha', beta'] on delta'*beta' whenever that product stays outside J,
  where x_j*x^gamma = x^alpha' * x^delta' is the head decomposition.

Coefficients that land back inside J only contribute at quadratic order
and are dropped; :mod:`arevlex.marked_reduction` re-derives the same rows
by full symbolic reduction and guards this truncation.

The tangent dimension is the parameter count minus the exact rank of the
stacked linear forms; comparing it with n*D (the dimension of the
component through the lexicographic point) certifies singularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from . import construct as _construct
from .errors import DomainError, StabilityError
from .hilbert import c_index, ci_hilbert, validate_degrees
from .ideals import (
    MonomialIdeal,
    _pommaret_raw,
    _slices,
    border_generator_count,
    colength,
    is_stable,
    is_strongly_stable,
)
from .linalg import rank as matrix_rank
from .terms import Term, raw_key, raw_min_var, raw_mul, raw_var


@dataclass(frozen=True)
class Parameter:
    """One coordinate C[alpha, beta] of the ambient space of the marked scheme."""

    alpha: Term
    beta: Term


@dataclass(frozen=True)
class LinearForm:
    """An integer linear functional on the parameters; no zero entries stored."""

    coefficients: tuple[tuple[Parameter, int], ...]

    def as_dict(self) -> dict[Parameter, int]:
        return dict(self.coefficients)


@dataclass(frozen=True)
class TangentReport:
    param_count: int
    equation_count: int
    rank: int
    tangent_dim: int
    lower_bound: int
    upper_bound: int
    lex_dim: int

    def to_json(self) -> dict:
        return {
            "params": self.param_count,
            "equations": self.equation_count,
            "rank": self.rank,
            "tangent_dim": self.tangent_dim,
            "lower": self.lower_bound,
            "upper": self.upper_bound,
            "lex_dim": self.lex_dim,
        }


@dataclass(frozen=True)
class ClassificationVerdict:
    verdict: str  # "singular" | "unknown"
    criterion: str
    witness: dict

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "certificate": {"criterion": self.criterion, "witness": self.witness},
        }


# ---------------------------------------------------------------------------
# parameters and the linearized reduction


def _require_artinian_stable(J: MonomialIdeal):
    if J.is_zero or not J.is_artinian:
        raise DomainError("operation requires an Artinian ideal")
    if not is_stable(J):
        raise StabilityError("operation requires a stable ideal")


def _full_sous_raw(J: MonomialIdeal) -> list[tuple[int, ...]]:
    """All of N(J) for Artinian stable J, degree-major increasing degrevlex."""
    out: list[tuple[int, ...]] = []
    for sl in _slices(J, J.max_gen_degree()):
        out.extend(sl)
    return out


def parameters(J: MonomialIdeal) -> list[Parameter]:
    """The |B_J| x |N(J)| parameters, generator-major, then increasing on beta."""
    _require_artinian_stable(J)
    betas = [Term(b) for b in _full_sous_raw(J)]
    return [Parameter(alpha, beta) for alpha in J.min_gens for beta in betas]


def _linear_rows(J: MonomialIdeal):
    """All linearized equations as sparse rows over parameter indices.

    Returns (rows, param_count, labels) where labels[k] = (gen index, beta).
    Row order: generator-major, then multiplying variable, then monomial.
    """
    gens = J._raw
    sous = _full_sous_raw(J)
    sset = set(sous)
    col: dict[tuple[int, tuple[int, ...]], int] = {}
    for gi in range(len(gens)):
        for b in sous:
            col[(gi, b)] = len(col)
    gidx = {g: i for i, g in enumerate(gens)}
    n = J.n
    rows = []
    for gi, g in enumerate(gens):
        k = raw_min_var(g)  # x_j runs over the variables above min(gamma)
        for j in range(1, k):
            xj = raw_var(n, j)
            alpha, delta = _pommaret_raw(J, raw_mul(xj, g))
            ai = gidx[alpha]
            eq: dict[tuple[int, ...], dict[int, int]] = {}
            for b in sous:
                m = raw_mul(xj, b)
                if m in sset:
                    eq.setdefault(m, {})[col[(gi, b)]] = 1
            for b in sous:
                m = raw_mul(delta, b)
                if m in sset:
                    d = eq.setdefault(m, {})
                    c = col[(ai, b)]
                    d[c] = d.get(c, 0) - 1
            for m in sorted(eq, key=raw_key):
                row = {c: v for c, v in eq[m].items() if v}
                if row:
                    rows.append(row)
    return rows, len(col), col


def linearized_reduce(J: MonomialIdeal, gamma: Term, j: int) -> dict[Term, LinearForm]:
    """Linear part of the remainder of x_j * f_gamma, one form per monomial."""
    _require_artinian_stable(J)
    if gamma not in J.min_gens:
        raise DomainError(f"{gamma} is not a minimal generator")
    if not 1 <= j <= J.n or j >= gamma.min_var():
        raise DomainError(f"x_{j} is not above min(gamma) = x_{gamma.min_var()}")
    n = J.n
    sous = _full_sous_raw(J)
    sset = set(sous)
    xj = raw_var(n, j)
    alpha, delta = _pommaret_raw(J, raw_mul(xj, gamma.exponents))
    alpha_t = Term(alpha)
    eq: dict[tuple[int, ...], dict[Parameter, int]] = {}
    for b in sous:
        m = raw_mul(xj, b)
        if m in sset:
            eq.setdefault(m, {})[Parameter(gamma, Term(b))] = 1
    for b in sous:
        m = raw_mul(delta, b)
        if m in sset:
            d = eq.setdefault(m, {})
            p = Parameter(alpha_t, Term(b))
            d[p] = d.get(p, 0) - 1
    out: dict[Term, LinearForm] = {}
    for m in sorted(eq, key=raw_key):
        entries = tuple((p, c) for p, c in eq[m].items() if c)
        if entries:
            out[Term(m)] = LinearForm(entries)
    return out


def tangent_dim(J: MonomialIdeal) -> TangentReport:
    """Exact tangent-space dimension with the generator-count bound sandwich."""
    _require_artinian_stable(J)
    rows, nparams, _ = _linear_rows(J)
    rk = matrix_rank(rows)
    D = colength(J)
    nb = len(J.min_gens)
    return TangentReport(
        param_count=nparams,
        equation_count=len(rows),
        rank=rk,
        tangent_dim=nparams - rk,
        lower_bound=nb * border_generator_count(J),
        upper_bound=nb * D,
        lex_dim=J.n * D,
    )


def tangent_bounds(J: MonomialIdeal) -> tuple[int, int]:
    """(|B_J| * border generators, |B_J| * colength)."""
    _require_artinian_stable(J)
    nb = len(J.min_gens)
    return nb * border_generator_count(J), nb * colength(J)


def triplet_dump(J: MonomialIdeal) -> str:
    """The assembled linear system in 'row col value' triplet text form."""
    rows, nparams, _ = _linear_rows(J)
    lines = [f"# {len(rows)} {nparams}"]
    for r, row in enumerate(rows):
        for c in sorted(row):
            lines.append(f"{r} {c} {row[c]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# singularity certificates


def classify_stable(J: MonomialIdeal) -> ClassificationVerdict:
    """Sufficient lower-bound test at an Artinian strongly stable ideal."""
    _require_artinian_stable(J)
    if not is_strongly_stable(J):
        raise StabilityError("classification requires a strongly stable ideal")
    lower, _ = tangent_bounds(J)
    lex = J.n * colength(J)
    if lower > lex:
        return ClassificationVerdict(
            "singular", "lower-bound", {"lower": lower, "lex_dim": lex}
        )
    return ClassificationVerdict(
        "unknown", "lower-bound", {"lower": lower, "lex_dim": lex}
    )


def hc1_bounds(degrees) -> tuple[Fraction, Fraction | None]:
    """Coarse and refined lower bounds for the peak value H(c_1), as rationals.

    The refined bound subtracts the binomial head and tail of the table and
    is reported as None when its denominator is nonpositive.
    """
    degrees = validate_degrees(degrees)
    n = len(degrees)
    D = prod(degrees)
    coarse = Fraction(D, sum(degrees))
    den = sum(degrees) - n + 1 - 2 * degrees[0]
    if den <= 0:
        return coarse, None
    refined = Fraction(D - 2 * comb(n + degrees[0] - 1, degrees[0] - 1), den)
    return coarse, refined


def classify_ci(degrees, exact: bool = True) -> ClassificationVerdict:
    """Singularity cascade for the almost revlex point with a CI Hilbert function.

    Purely numeric criteria run first; the exact tangent computation is the
    last resort (skipped when ``exact`` is false).  A verdict of unknown
    never claims smoothness.
    """
    degrees = validate_degrees(degrees)
    n = len(degrees)
    if n < 3:
        raise DomainError(
            "need at least 3 forms: the length-2 punctual Hilbert scheme "
            "is irreducible and smooth"
        )
    D = prod(degrees)
    lex = n * D
    total = sum(degrees)

    if D > n * total**2:
        return ClassificationVerdict(
            "singular",
            "numeric-criterion-(i)",
            {"product": D, "n_sum_sq": n * total**2},
        )
    head = prod(degrees[:-1])
    if head > n**3 * degrees[-1]:
        return ClassificationVerdict(
            "singular",
            "numeric-criterion-(ii)",
            {"head_product": head, "n3_dn": n**3 * degrees[-1]},
        )
    if degrees[-1] == degrees[-2] and prod(degrees[:-2]) >= n**3:
        return ClassificationVerdict(
            "singular",
            "numeric-criterion-(iii)",
            {"head_product": prod(degrees[:-2]), "n3": n**3},
        )

    H = ci_hilbert(degrees)
    hc1 = H(c_index(H, 1))
    if hc1 * hc1 >= lex:
        return ClassificationVerdict(
            "singular", "Hc1-squared", {"hc1": hc1, "lex_dim": lex}
        )
    gens = _construct.mingen_count_formula(H, 0, n)
    if gens * hc1 > lex:
        return ClassificationVerdict(
            "singular",
            "sum-times-Hc1",
            {"mingens": gens, "hc1": hc1, "product": gens * hc1, "lex_dim": lex},
        )
    _, refined = hc1_bounds(degrees)
    if refined is not None and refined > 0 and refined * refined > lex:
        return ClassificationVerdict(
            "singular",
            "refined-Hc1",
            {"refined_bound": str(refined), "lex_dim": lex},
        )
    if not exact:
        return ClassificationVerdict(
            "unknown", "none", {"hc1": hc1, "mingens": gens, "lex_dim": lex}
        )
    J = _construct.almost_revlex_ci(n, degrees)
    report = tangent_dim(J)
    if report.tangent_dim > lex:
        return ClassificationVerdict(
            "singular",
            "exact-tangent",
            {"tangent_dim": report.tangent_dim, "lex_dim": lex},
        )
    return ClassificationVerdict(
        "unknown", "none", {"tangent_dim": report.tangent_dim, "lex_dim": lex}
    )
