from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import STABLE8_TLEX, mono, monos
from tspread.errors import DomainError
from tspread.expansion import count_tspread
from tspread.formats import read_ideal_file
from tspread.ideal import (
    FtVector,
    TSpreadIdeal,
    d_max,
    ft_vector,
    graded_part,
    ideal_from_lex_sizes,
    is_lex_ideal,
    is_strongly_stable_ideal,
    minimalize,
    strongly_stable_closure,
    tlex,
)
from tspread.lexset import LexSegment, materialize, shadow
from tspread.monomial import enumerate_tspread
from tspread.oracle import brute_graded_part


def test_d_max():
    assert d_max(8, 2) == 4
    assert d_max(7, 3) == 3
    assert d_max(1, 5) == 1
    assert d_max(0, 2) == 0


def test_ideal_requires_minimal_generators():
    with pytest.raises(DomainError, match="not minimal"):
        TSpreadIdeal(8, 2, monos("x1x3", "x1x3x5"))
    ideal = TSpreadIdeal.generated_by(8, 2, monos("x1x3", "x1x3x5"))
    assert ideal.generators == (mono("x1x3"),)


def test_ideal_validates_generators():
    with pytest.raises(DomainError):
        TSpreadIdeal(8, 2, monos("x1x2"))
    with pytest.raises(DomainError):
        TSpreadIdeal(6, 2, monos("x1x7"))


def test_ideal_str():
    assert str(TSpreadIdeal(5, 2)) == "(0)"
    ideal = TSpreadIdeal.generated_by(7, 3, monos("x1x6", "x1x4", "x1x5"))
    assert str(ideal) == "(x1x4, x1x5, x1x6)"


def test_graded_part_of_example(stable8):
    assert graded_part(stable8, 4).members == tuple(
        monos("x1x3x5x7", "x1x3x5x8", "x1x3x6x8", "x1x4x6x8", "x2x4x6x8")
    )
    assert len(graded_part(stable8, 2)) == 0
    assert len(graded_part(stable8, 0)) == 0
    assert len(graded_part(stable8, 9)) == 0


def test_graded_part_of_obstruction(obstruction_ideal):
    assert set(graded_part(obstruction_ideal, 3)) == set(
        monos("x2x4x6", "x2x4x7", "x2x4x8", "x2x5x8", "x2x6x8")
    )


def test_graded_part_rejects_negative_degree(stable8):
    with pytest.raises(DomainError):
        graded_part(stable8, -1)


def test_graded_part_matches_divisibility(stable8, obstruction_ideal, nonstable_ideal):
    for ideal in (stable8, obstruction_ideal, nonstable_ideal):
        for j in range(1, d_max(ideal.n, ideal.t) + 1):
            assert graded_part(ideal, j) == brute_graded_part(ideal, j)
            assert set(shadow(graded_part(ideal, j))) <= set(graded_part(ideal, j + 1))


def test_ft_vector():
    I1 = TSpreadIdeal.generated_by(4, 2, monos("x1x3", "x2x4"))
    assert ft_vector(I1) == FtVector(2, (1, 4, 1, 0, 0))
    assert ft_vector(TSpreadIdeal(5, 2)).entries == (1, 5, 6, 1)


def test_ft_vector_of_example(stable8):
    f = ft_vector(stable8)
    assert f.entries == (1, 8, 21, 10, 0)
    assert str(f) == "1,8,21,10,0"


def test_ft_vector_bounds(stable8, obstruction_ideal, nonstable_ideal):
    for ideal in (stable8, obstruction_ideal, nonstable_ideal):
        f = ft_vector(ideal)
        assert f[0] == 1
        for j in range(1, len(f)):
            assert 0 <= f[j] <= count_tspread(ideal.n, j, ideal.t)


def test_ft_vector_equality_ignores_trailing_zeros():
    assert FtVector(2, (1, 4, 1)) == FtVector(2, (1, 4, 1, 0, 0))
    assert hash(FtVector(2, (1, 4, 1))) == hash(FtVector(2, (1, 4, 1, 0)))
    assert FtVector(2, (1, 4, 1)) != FtVector(3, (1, 4, 1))
    assert FtVector(2, (1, 4))[7] == 0
    with pytest.raises(DomainError):
        FtVector(2, (1, -4))


def test_stability_and_lex_predicates(samples_dir, nonstable_ideal):
    counter = read_ideal_file(samples_dir / "lexcounter.ideal")
    assert is_strongly_stable_ideal(counter)
    assert not is_lex_ideal(counter)
    assert not is_strongly_stable_ideal(nonstable_ideal)
    zero = TSpreadIdeal(6, 2)
    assert is_strongly_stable_ideal(zero)
    assert is_lex_ideal(zero)


def test_tlex_of_example(stable8):
    result = tlex(stable8)
    assert result.succeeded
    assert result.ideal.generators == tuple(monos(*STABLE8_TLEX))
    assert is_lex_ideal(result.ideal)
    assert ft_vector(result.ideal) == ft_vector(stable8)


def test_tlex_trace_of_example(stable8):
    trace = tlex(stable8).trace
    assert trace.succeeded
    sizes = [step.segment.size for step in trace.steps]
    assert sizes == [0, 0, 10, 5]
    assert trace.steps[3].shadow_size == 4
    assert trace.steps[3].generators == (mono("x2x4x6x8"),)
    # B_4 holds x1^2 x3 x5 through shad_0(B_3), but nothing in x2, x4, x6 alone
    assert trace.basis_contains((1, 1, 3, 5), 4)
    assert not trace.basis_contains((2, 2, 4, 6), 4)
    with pytest.raises(DomainError):
        trace.basis_contains((1, 3), 4)


def test_tlex_obstruction(obstruction_ideal):
    result = tlex(obstruction_ideal)
    assert not result.succeeded
    assert result.ideal is None
    assert result.trace.failure_degree == 3
    assert result.trace.required == 9
    assert result.trace.available == 5


def test_tlex_of_non_stable_ideal(nonstable_ideal):
    result = tlex(nonstable_ideal)
    assert result.succeeded
    assert result.ideal.generators == tuple(monos("x1x4", "x1x5", "x1x6"))


def test_tlex_of_lex_ideal_is_itself(stable8):
    lex = tlex(stable8).ideal
    assert tlex(lex).ideal == lex


def test_ideal_from_lex_sizes_rejects_unit_ideal():
    with pytest.raises(DomainError):
        ideal_from_lex_sizes(5, 2, [1, 5])


def test_minimalize():
    assert minimalize(monos("x1x3", "x1x3x5")) == (mono("x1x3"),)
    already = tuple(monos("x1x3", "x2x4x6"))
    assert minimalize(already) == already
    bases = monos(*STABLE8_TLEX) + list(enumerate_tspread(8, 4, 2))
    assert minimalize(bases) == tuple(monos(*STABLE8_TLEX))


def test_strongly_stable_closure(stable8):
    closure = strongly_stable_closure(monos("x2x4x6"), 7, 2)
    assert closure.contains(mono("x1x3x5"))
    assert is_strongly_stable_ideal(closure)
    assert strongly_stable_closure(monos("x1x7"), 7, 3).generators == tuple(
        monos("x1x4", "x1x5", "x1x6", "x1x7")
    )
    assert strongly_stable_closure(stable8.generators, 8, 2) == stable8


def test_strongly_stable_closure_rejects_non_members():
    with pytest.raises(DomainError):
        strongly_stable_closure(monos("x1x2"), 7, 2)


@st.composite
def stable_ideals(draw):
    n = draw(st.integers(1, 9))
    t = draw(st.integers(1, 3))
    gens = []
    for _ in range(draw(st.integers(1, 4))):
        d = draw(st.integers(1, d_max(n, t)))
        gens.append(draw(st.sampled_from(enumerate_tspread(n, d, t).members)))
    return strongly_stable_closure(gens, n, t)


@settings(max_examples=150, deadline=None)
@given(stable_ideals())
def test_tlex_exists_for_stable_ideals(ideal):
    assert is_strongly_stable_ideal(ideal)
    result = tlex(ideal)
    assert result.succeeded
    assert is_lex_ideal(result.ideal)
    assert ft_vector(result.ideal) == ft_vector(ideal)


@settings(max_examples=100, deadline=None)
@given(stable_ideals())
def test_lex_ideal_is_determined_by_ft_vector(ideal):
    lex = tlex(ideal).ideal
    again = tlex(TSpreadIdeal.generated_by(ideal.n, ideal.t, lex.generators)).ideal
    assert again == lex
    assert lex.graded_parts == again.graded_parts


def _lex_ideals(n, t):
    """Every lex ideal generated by one lex segment per degree."""
    degrees = range(1, d_max(n, t) + 1)
    for sizes in product(*(range(count_tspread(n, j, t) + 1) for j in degrees)):
        gens = [
            u for j, size in zip(degrees, sizes) for u in materialize(LexSegment(n, j, t, size))
        ]
        ideal = TSpreadIdeal.generated_by(n, t, gens)
        if is_lex_ideal(ideal):
            yield ideal


@pytest.mark.parametrize("n, t", [(4, 1), (5, 2), (6, 2), (7, 3)])
def test_lex_ideals_with_equal_ft_vectors_are_equal(n, t):
    by_vector = {}
    for ideal in _lex_ideals(n, t):
        by_vector.setdefault(ft_vector(ideal), set()).add(ideal)
    assert len(by_vector) > 1
    for f, ideals in by_vector.items():
        assert len(ideals) == 1, f
        (ideal,) = ideals
        assert tlex(ideal).ideal == ideal
