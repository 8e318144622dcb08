import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triuniv import catalog
from triuniv.core import TriSum
from triuniv.reduction import (
    TailAssignment,
    TernarySectionForm,
    reduction_solver,
    section_oracle,
    shifted_target,
    substituted_solvable,
    tail_search,
    verify_oracles,
)
from triuniv.representation import represents

# x^2 + (2y + z)^2 + 8 z^2
FORM_118 = TernarySectionForm((1, 1, 8), ((1, 0, 0), (0, 2, 1), (0, 0, 1)))
# 2 (4x + y)^2 + 2 y^2 + 3 z^2
FORM_223 = TernarySectionForm((2, 2, 3), ((4, 1, 0), (0, 1, 0), (0, 0, 1)))


def brute_odd_tail(coeffs, m):
    """First odd tail in lexicographic order whose residual the section hits with odd values."""
    section, tail = coeffs[:3], coeffs[3:]
    odds = range(1, 2 * int(m ** 0.5) + 3, 2)
    for values in itertools.product(odds, repeat=len(tail)):
        residual = m - sum(a * v * v for a, v in zip(tail, values))
        if residual < 0:
            continue
        if any(sum(a * v * v for a, v in zip(section, xs)) == residual
               for xs in itertools.product(odds, repeat=3)):
            return values, residual
    return None


@pytest.mark.parametrize("s, n, expected", [
    ("1,1,8", 0, 10), ("1,1,8", 5, 90), ("1,1,6,6", 0, 14), ("2,2,3,3", 0, 10),
])
def test_shifted_target(s, n, expected):
    assert shifted_target(s, n) == expected


@pytest.mark.parametrize("s, residual", [("1,1,6,6", 8), ("2,2,3,3", 7), ("1,1,7,7", 9)])
def test_tail_search_zero_target(s, residual):
    coeffs = TriSum(tuple(map(int, s.split(",")))).coefficients
    assert brute_odd_tail(coeffs, shifted_target(s, 0)) == ((1,), residual)
    assert tail_search(s, 0) == TailAssignment((1,), residual)


@pytest.mark.parametrize("s", ["1,1,6,6", "2,2,3,3", "1,1,7,7", "2,2,5,6,9"])
def test_tail_search_matches_brute_force(s):
    coeffs = TriSum(tuple(map(int, s.split(",")))).coefficients
    for n in range(0, 12):
        expected = brute_odd_tail(coeffs, shifted_target(s, n))
        found = tail_search(s, n)
        assert (found.values, found.residual) == expected if found else expected is None


def test_tail_search_needs_four_coefficients():
    with pytest.raises(ValueError):
        tail_search("1,1,8", 0)


def test_tail_assignment_invariants():
    with pytest.raises(ValueError):
        TailAssignment((2,), 5)
    with pytest.raises(ValueError):
        TailAssignment((1,), -1)


def test_default_substitution_pattern():
    form = TernarySectionForm.for_section("2,2,3,3")
    assert form.parity_pattern == (0, 0, 1) and form.supported
    assert form.evaluate((1, 2, 3)) == 2 * 1 + 2 * 1 + 3 * 9
    assert not TernarySectionForm.for_section("1,1,8").supported
    assert not TernarySectionForm.for_section("1,2,3").supported


def test_unsupported_form_refuses_to_solve():
    with pytest.raises(ValueError):
        TernarySectionForm.for_section("1,1,8").solve(10)


def test_singular_substitution_rejected():
    with pytest.raises(ValueError):
        TernarySectionForm((2, 2, 3), ((1, 0, 0), (1, 0, 0), (0, 0, 1)))


@pytest.mark.parametrize("section", ["2,2,3", "2,4,7", "2,3,4", "4,6,9"])
def test_parity_forcing(section):
    form = TernarySectionForm.for_section(section)
    total = sum(form.coefficients)
    hits = 0
    for n in range(150):
        x = form.solve(16 * n + total)
        if x is None:
            continue
        hits += 1
        assert form.evaluate(x) == 16 * n + total
        assert all(y % 2 for y in form.diagonal(x))
    assert hits > 0


def test_one_one_eight_form_covers_the_progression():
    for n in range(501):
        x = FORM_118.solve(16 * n + 10)
        assert x is not None, n
        assert all(y % 2 for y in FORM_118.diagonal(x))


def _three_adic_exception(m):
    u = 0
    while m % 3 == 0:
        m //= 3
        u += 1
    return u % 2 == 1 and m % 3 == 2


def test_two_two_three_form_on_seven_mod_eight():
    for m in range(7, 4001, 8):
        if _three_adic_exception(m):
            continue
        x = FORM_223.solve(m)
        assert x is not None, m
        assert all(y % 2 for y in FORM_223.diagonal(x))
        assert substituted_solvable(FORM_223, m)


def test_solve_with_search_bound():
    assert FORM_223.solve(7, bound=1) is not None
    assert not substituted_solvable(FORM_223, 10**4 + 7, bound=0)


def test_reduction_sound_on_1166():
    for target in range(0, 2001, 2):
        if reduction_solver("1,1,6,6", target):
            assert represents("1,1,6,6", target)


def test_reduction_known_exception():
    assert not reduction_solver("2,2,5,6", 16)
    assert reduction_solver("2,2,5,6", 14)


def test_reduction_zero_target_on_table():
    for group in catalog.table1_expected().values():
        for s in group:
            assert reduction_solver(s, 0)


def test_reduction_argument_checks():
    with pytest.raises(ValueError):
        reduction_solver("1,1", 2)
    with pytest.raises(ValueError):
        reduction_solver("1,1,8", 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=3, max_size=5), st.integers(0, 80))
def test_reduction_soundness_property(coeffs, n):
    s = TriSum(tuple(coeffs))
    if reduction_solver(s, 2 * n):
        assert represents(s, 2 * n)


def test_section_oracle_routes():
    assert section_oracle("2,2,3,3")(7)
    assert section_oracle("1,1,8")(10)
    assert not section_oracle("1,1,8")(12)


def test_verify_oracles_small():
    report = verify_oracles(["1,1,8", "2,2,5,6", "1,1"], 200)
    assert report.ok and report.sums == 3 and report.targets == 303
