from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tspread.errors import DomainError
from tspread.expansion import (
    binom,
    classic_successor,
    count_tspread,
    macaulay_expand,
    segment_boundary,
    successor_case,
    t_successor,
    t_successor_closed_form,
)
from tspread.lexset import LexSegment, materialize, shadow


def _all_expansions(a, j, ceiling):
    """Every strictly decreasing term sequence (a_j, j), ... summing to a."""
    if a == 0:
        yield ()
        return
    if j < 1:
        return
    for top in range(j, ceiling):
        value = comb(top, j)
        if value > a:
            break
        for rest in _all_expansions(a - value, j - 1, top):
            yield ((top, j),) + rest


def test_binom_generalized_convention():
    assert binom(5, 2) == 10
    assert binom(2, 5) == 0
    assert binom(-3, 2) == 0
    assert binom(4, -1) == 0
    assert binom(0, 0) == 1


def test_expand_2018():
    expansion = macaulay_expand(2018, 8)
    assert expansion.terms == ((13, 8), (11, 7), (10, 6), (9, 5), (7, 4), (6, 3), (5, 2))
    assert expansion.r == 2
    assert str(expansion) == "C(13,8)+C(11,7)+C(10,6)+C(9,5)+C(7,4)+C(6,3)+C(5,2)"


def test_expand_50():
    assert macaulay_expand(50, 2).terms == ((10, 2), (5, 1))


def test_expand_one_and_zero():
    for d in range(1, 8):
        assert macaulay_expand(1, d).terms == ((d, d),)
    zero = macaulay_expand(0, 3)
    assert zero.terms == ()
    assert zero.r == 4
    assert str(zero) == "0"


def test_expand_rejects_bad_arguments():
    with pytest.raises(DomainError):
        macaulay_expand(-1, 2)
    with pytest.raises(DomainError):
        macaulay_expand(5, 0)


def test_expand_round_trip():
    for d in range(1, 10):
        for a in range(0, 5001):
            expansion = macaulay_expand(a, d)
            assert expansion.value() == a
            tops = [top for top, _ in expansion.terms]
            assert tops == sorted(set(tops), reverse=True)
            assert all(top >= j >= 1 for top, j in expansion.terms)


def test_expansion_is_unique():
    for d in range(1, 6):
        for a in range(1, 301):
            found = list(_all_expansions(a, d, a + d + 1))
            assert found == [macaulay_expand(a, d).terms]


def test_classic_successor():
    assert classic_successor(12, 1) == 66
    assert classic_successor(20, 3) == 15
    assert classic_successor(50, 2) == 130
    for d in range(1, 8):
        assert classic_successor(0, d) == 0


def test_t_successor_worked_values():
    assert t_successor(2018, 8, 3, 28) == 82
    assert t_successor(50, 2, 1, 12) == 130
    assert t_successor(10, 2, 2, 6) == 4
    assert t_successor(0, 4, 2, 20) == 0


def test_t_successor_of_full_universe():
    for n in range(1, 12):
        for d in range(1, 4):
            for t in range(1, 4):
                size = count_tspread(n, d, t)
                assert t_successor(size, d, t, n) == binom(n - d * (t - 1), d + 1)


def test_t_successor_rejects_oversized_argument():
    with pytest.raises(DomainError, match="exceeds"):
        t_successor(11, 2, 2, 6)


def test_t_successor_reduces_to_classic():
    for n in range(1, 13):
        for d in range(1, 5):
            for a in range(comb(n, d) + 1):
                assert t_successor(a, d, 1, n) == classic_successor(a, d)


def test_t_successor_counts_shadow_complement():
    for n in range(1, 11):
        for d in range(1, 4):
            for t in range(1, 4):
                size = count_tspread(n, d, t)
                upper = count_tspread(n, d + 1, t)
                for a in range(size + 1):
                    lex = materialize(LexSegment(n, d, t, size - a))
                    assert t_successor(a, d, t, n) == upper - len(shadow(lex))


def _successor_by_profile(a, d, t, n):
    """t_successor summed one index i at a time."""
    size = count_tspread(n, d, t)
    upper = count_tspread(n, d + 1, t)
    if a == 0:
        return 0
    if a == size:
        return upper
    u = segment_boundary(a, n, d, t)
    total = 0
    for i in range(1 + (d - 1) * t, n - t + 1):
        below = 0
        for p in range(d):
            if p > 0 and u[p - 1] > i:
                break
            below += binom(i - u[p] - (d - 1 - p) * (t - 1), d - p)
        total += count_tspread(i, d, t) - below
    return upper - total


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 60), st.integers(1, 5), st.integers(1, 4), st.data())
def test_t_successor_matches_profile_sum(n, d, t, data):
    a = data.draw(st.integers(0, count_tspread(n, d, t)))
    assert t_successor(a, d, t, n) == _successor_by_profile(a, d, t, n)


def test_t_successor_for_huge_n():
    n = 10**12
    assert t_successor(5, 2, 1, n) == classic_successor(5, 2)
    # L = {x1x3x5}: its 2-shadow is x1x3x5x_k for 7 <= k <= n
    a = count_tspread(n, 3, 2) - 1
    assert t_successor(a, 3, 2, n) == comb(n - 3, 4) - (n - 6)


def test_segment_boundary():
    # complement of size 19 in M_{8,3,2} leaves only the lex-greatest member
    assert segment_boundary(19, 8, 3, 2) == (1, 3, 5)
    assert segment_boundary(0, 8, 3, 2) == (4, 6, 8)
    with pytest.raises(DomainError):
        segment_boundary(20, 8, 3, 2)


def test_closed_form_worked_value():
    assert t_successor_closed_form(2018, 8, 3, 28) == 82
    assert successor_case(2018, 8, 3, 28) == 7


def test_closed_form_matches_classic_for_t_one():
    for n in range(1, 9):
        for d in range(1, 4):
            for a in range(comb(n, d) + 1):
                assert t_successor_closed_form(a, d, 1, n) == classic_successor(a, d)


def test_closed_form_overcounts_when_smallest_member_cannot_extend():
    # L = {x1, x2, x3, x4} already covers M_{5,2,2}; only x5 is missing
    assert t_successor_closed_form(1, 1, 2, 5) == 1
    assert t_successor(1, 1, 2, 5) == 0


def test_successor_case_rejects_zero():
    with pytest.raises(DomainError):
        successor_case(0, 2, 2, 8)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**40), st.integers(1, 30))
def test_expansion_of_large_values(a, d):
    expansion = macaulay_expand(a, d)
    assert expansion.value() == a
    if a:
        assert expansion.terms[0][1] == d
