"""The greedy construction, uniqueness, failure reporting and generator counts."""

from __future__ import annotations


import pytest

from arevlex import (
    DomainError,
    Eventual,
    HilbertFunction,
    NoAlmostRevlexIdeal,
    Term,
    almost_revlex_ci,
    almost_revlex_for,
    border_generator_count,
    c_index,
    ci_hilbert,
    first_expansion,
    greatest,
    hf_of_ideal,
    is_almost_revlex,
    mingen_count_ci,
    mingen_count_formula,
    minimalize,
    sous_escalier,
    term,
)

from helpers import ci_degree_grid, curve_ideal

J344_GENS = [
    term(3, 0, 0),
    term(1, 3, 0), term(2, 2, 0),
    term(0, 4, 1), term(0, 5, 0),
    term(0, 3, 3), term(1, 2, 3), term(2, 1, 3),
    term(0, 2, 5), term(1, 1, 5), term(2, 0, 5),
    term(0, 1, 7), term(1, 0, 7),
    term(0, 0, 9),
]


def test_greatest_golden():
    J = minimalize([term(3, 0, 0), term(2, 2, 0), term(1, 3, 0)])
    exp4 = first_expansion(J, 4)
    assert greatest(exp4, 2) == [term(0, 4, 1), term(0, 5, 0)]
    assert greatest(exp4, 0) == []
    Jnext = minimalize(list(J.min_gens) + [term(0, 5, 0), term(0, 4, 1)])
    exp5 = first_expansion(Jnext, 5)
    assert greatest(exp5, 3) == [term(0, 3, 3), term(1, 2, 3), term(2, 1, 3)]
    with pytest.raises(DomainError):
        greatest(exp4, len(exp4) + 1)
    with pytest.raises(DomainError):
        greatest([term(1, 0), term(2, 0)], 1)


def test_construction_golden_344():
    J = almost_revlex_ci(3, (3, 4, 4))
    assert list(J.min_gens) == J344_GENS


def test_construction_single_variable():
    assert almost_revlex_ci(1, (5,)).min_gens == (term(5,),)


def test_construction_small_cube():
    J = almost_revlex_ci(3, (2, 2, 2))
    assert is_almost_revlex(J)
    assert [len(sous_escalier(J, t)) for t in range(4)] == [1, 3, 3, 1]


def test_construction_validates():
    with pytest.raises(DomainError):
        almost_revlex_ci(2, (4, 3))
    with pytest.raises(DomainError):
        almost_revlex_ci(3, (2, 2))
    with pytest.raises(DomainError):
        almost_revlex_ci(2, (1, 3))


def test_greedy_from_table_equals_ci_route():
    for degs in [(3, 4, 4), (2, 2, 2), (2, 3, 5), (2, 2, 2, 3)]:
        n = len(degs)
        H = ci_hilbert(degs)
        assert almost_revlex_for(H) == almost_revlex_ci(n, degs)


def test_greedy_failure_reports_degree():
    H = HilbertFunction((1, 13, 12, 13, 1, 0), Eventual("zero"))
    with pytest.raises(NoAlmostRevlexIdeal) as info:
        almost_revlex_for(H)
    assert info.value.degree == 3


def test_greedy_power_table():
    for d in (2, 5, 9):
        H = HilbertFunction((1,) * d + (0,), Eventual("zero"))
        assert almost_revlex_for(H).min_gens == (term(d),)


def test_greedy_validates_table():
    with pytest.raises(DomainError):
        almost_revlex_for(HilbertFunction((1, 2, 2), Eventual("constant", 2)))
    with pytest.raises(DomainError):
        almost_revlex_for(HilbertFunction((2, 3, 0), Eventual("zero")))
    with pytest.raises(DomainError):
        almost_revlex_for(HilbertFunction((1, 2, 0, 2, 0), Eventual("zero")))


def test_mingen_counts_golden():
    H = hf_of_ideal(curve_ideal(), 5)
    assert mingen_count_formula(H, 1, 3) == 5 == len(curve_ideal().min_gens)
    assert mingen_count_formula(ci_hilbert((3, 4, 4)), 0, 3) == 14
    assert mingen_count_ci((3, 4, 4)) == 14
    assert mingen_count_ci((5,)) == 1
    assert mingen_count_ci((5, 5, 5)) == 25
    # the five-fold quadric case: direct construction, the closed formula and
    # the double sum all give 21 generators
    assert len(almost_revlex_ci(5, (2,) * 5).min_gens) == 21
    assert mingen_count_formula(ci_hilbert((2,) * 5), 0, 5) == 21
    assert mingen_count_ci((2,) * 5) == 21


def test_three_way_count_agreement_small_grid():
    for degs in ci_degree_grid(4, 2, 6, 400):
        n = len(degs)
        J = almost_revlex_ci(n, degs)
        H = ci_hilbert(degs)
        assert len(J.min_gens) == mingen_count_formula(H, 0, n) == mingen_count_ci(degs)


def test_partial_hilbert_values_track_target():
    # rebuild degree by degree and compare partial staircase counts
    degs = (2, 3, 4)
    H = ci_hilbert(degs)
    J = almost_revlex_ci(3, degs)
    for t in range(sum(degs) - len(degs) + 2):
        partial = minimalize(
            [g for g in J.min_gens if g.degree <= t] or [], n=3
        )
        assert len(sous_escalier(partial, t)) == H(t)


def test_final_generator_is_pure_power_of_last_variable():
    for degs in ci_degree_grid(4, 2, 5, 300):
        J = almost_revlex_ci(len(degs), degs)
        top = sum(degs) - len(degs) + 1
        want = tuple(0 for _ in range(len(degs) - 1)) + (top,)
        assert J.min_gens[-1] == Term(want), degs


def test_border_count_equals_peak_value():
    for degs in ci_degree_grid(4, 2, 6, 400):
        J = almost_revlex_ci(len(degs), degs)
        H = ci_hilbert(degs)
        assert border_generator_count(J) == H(c_index(H, 1)), degs


def test_greedy_rebuilds_every_enumerated_almost_revlex_ideal():
    # across all Artinian stable ideals with n <= 3 and colength <= 10, the
    # almost revlex ones are uniquely determined by their value tables, and
    # the greedy reconstructs each from its table alone
    from helpers import artinian_stable_ideals

    by_table = {}
    for J in artinian_stable_ideals(3, 10):
        if not is_almost_revlex(J):
            continue
        H = hf_of_ideal(J, 0)
        key = (J.n, tuple(H.values))
        assert key not in by_table, (by_table.get(key), J)
        by_table[key] = J
    assert len(by_table) > 40
    for (n, values), J in by_table.items():
        table = HilbertFunction(values, Eventual("zero"))
        if table(1) != n:
            continue  # tables with degree-1 generators fix a smaller ring
        assert almost_revlex_for(table) == J
