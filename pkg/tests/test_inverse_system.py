"""Derivative spaces, h-vectors, truncations, and generic quotients."""

import pytest

from apolarity_lab import (
    DegreeOutOfRange,
    DependentGenerators,
    Form,
    HVector,
    InvalidParameter,
    LevelPresentation,
    MixedDegrees,
    MixedVariableCounts,
    PrimeField,
    SeededRng,
    TypeTooLarge,
    ZeroForm,
    derivative_space,
    generic_quotient,
    hvector,
    truncation,
    truncation_basis,
    validate_level,
)


def test_presentation_validation(fp, make_pres):
    with pytest.raises(InvalidParameter):
        LevelPresentation(fp, 2, 3, ())
    with pytest.raises(MixedVariableCounts):
        LevelPresentation(
            fp, 2, 3, (Form(2, 3, {(2, 1): 1}), Form(3, 3, {(3, 0, 0): 1}))
        )
    with pytest.raises(MixedDegrees):
        LevelPresentation(
            fp, 2, 3, (Form(2, 3, {(2, 1): 1}), Form(2, 2, {(2, 0): 1}))
        )
    with pytest.raises(ZeroForm):
        make_pres(fp, 2, 3, [{(2, 1): 0}])
    # prime must exceed the socle degree
    with pytest.raises(InvalidParameter):
        make_pres(PrimeField(3), 2, 3, [{(2, 1): 1}])


def test_validate_level(fp, make_pres):
    single = make_pres(fp, 1, 3, [{(3,): 1}])
    assert validate_level(single) == 1
    dependent = make_pres(fp, 1, 3, [{(3,): 1}, {(3,): 2}])
    with pytest.raises(DependentGenerators) as info:
        validate_level(dependent)
    assert info.value.index == 1


def test_monomial_gorenstein(fp, make_pres):
    pres = make_pres(fp, 1, 3, [{(3,): 1}])
    assert hvector(pres) == (1, 1, 1, 1)


def test_hand_checked_two_variable_case(fp, make_pres):
    # F = y1^2 y2: derivatives 2y1y2, y1^2 then y1, y2 then constants
    pres = make_pres(fp, 2, 3, [{(2, 1): 1}])
    assert hvector(pres) == (1, 2, 2, 1)
    assert derivative_space(pres, 1).rank == 2
    assert derivative_space(pres, 0).rank == 1
    assert derivative_space(pres, 3).rank == 1


def test_derivative_space_bounds(fp, make_pres):
    pres = make_pres(fp, 2, 3, [{(2, 1): 1}])
    with pytest.raises(DegreeOutOfRange):
        derivative_space(pres, 4)
    with pytest.raises(DegreeOutOfRange):
        derivative_space(pres, -1)


def test_derivative_space_top_is_generator_span(fp, make_pres):
    pres = make_pres(fp, 2, 4, [{(2, 2): 1}, {(4, 0): 1}])
    top = derivative_space(pres, 4)
    assert top.rank == 2
    assert top.degree == 4


def test_block_family_type_and_h(fp, make_pres):
    # two generators in six variables, each a sum of two sparse cubics times
    # one extra variable
    gens = [
        {(3, 0, 1, 0, 0, 0): 1, (0, 3, 0, 1, 0, 0): 1},
        {(3, 0, 0, 0, 1, 0): 1, (0, 3, 0, 0, 0, 1): 1},
    ]
    pres = make_pres(fp, 6, 4, gens)
    assert validate_level(pres) == 2
    assert hvector(pres) == (1, 6, 6, 6, 2)


def test_truncation_basis_and_h(fp, make_pres):
    pres = make_pres(fp, 1, 3, [{(3,): 1}])
    basis = truncation_basis(pres, 2)
    assert len(basis) == 1
    assert basis[0].terms == {(2,): 1}

    gens = [
        {(3, 0, 1, 0, 0, 0): 1, (0, 3, 0, 1, 0, 0): 1},
        {(3, 0, 0, 0, 1, 0): 1, (0, 3, 0, 0, 0, 1): 1},
    ]
    family = make_pres(fp, 6, 4, gens)
    truncated = truncation(family, 3)
    assert truncated.socle_degree == 3
    assert truncated.type == 6
    assert hvector(truncated) == (1, 6, 6, 6)


def test_truncation_top_degree_preserves_span(fp, make_pres):
    pres = make_pres(fp, 2, 3, [{(2, 1): 1}, {(0, 3): 1}])
    same = truncation(pres, 3)
    assert hvector(same) == hvector(pres)


def test_generic_quotient_full_echo(fp, make_pres):
    gens = [
        {(3, 0, 1, 0, 0, 0): 1, (0, 3, 0, 1, 0, 0): 1},
        {(3, 0, 0, 0, 1, 0): 1, (0, 3, 0, 0, 0, 1): 1},
    ]
    pres = make_pres(fp, 6, 4, gens)
    full = generic_quotient(pres, 4, 2, SeededRng(17))
    assert hvector(full) == hvector(pres)


def test_generic_quotient_type_one(fp, make_pres):
    gens = [
        {(3, 0, 1, 0, 0, 0): 1, (0, 3, 0, 1, 0, 0): 1},
        {(3, 0, 0, 0, 1, 0): 1, (0, 3, 0, 0, 0, 1): 1},
    ]
    pres = make_pres(fp, 6, 4, gens)
    for seed in range(5):
        q = generic_quotient(pres, 4, 1, SeededRng(seed))
        assert q.type == 1
        assert q.socle_degree == 4
        assert hvector(q) == (1, 4, 4, 4, 1)


def test_generic_quotient_guards(fp, make_pres):
    pres = make_pres(fp, 2, 3, [{(2, 1): 1}])
    with pytest.raises(DegreeOutOfRange):
        generic_quotient(pres, 4, 1, SeededRng(0))
    with pytest.raises(TypeTooLarge):
        generic_quotient(pres, 2, 3, SeededRng(0))  # h_2 = 2


def test_quotient_socle_vector_is_level(fp, make_pres):
    # quotient generators must stay independent, making the result level of
    # the requested type
    gens = [
        {(3, 0, 1, 0, 0, 0): 1, (0, 3, 0, 1, 0, 0): 1},
        {(3, 0, 0, 0, 1, 0): 1, (0, 3, 0, 0, 0, 1): 1},
    ]
    pres = make_pres(fp, 6, 4, gens)
    q = generic_quotient(pres, 3, 4, SeededRng(23))
    assert validate_level(q) == 4
    h = hvector(q)
    assert h.socle_degree == 3
    assert h[3] == 4


def test_hvector_type():
    h = HVector((1, 6, 6, 6, 2))
    assert h.socle_degree == 4
    assert str(h) == "1,6,6,6,2"
    assert HVector.parse("1,6,6,6,2") == h
    with pytest.raises(InvalidParameter):
        HVector((2, 1))
    with pytest.raises(InvalidParameter):
        HVector((1, 2, 0))
    with pytest.raises(InvalidParameter):
        HVector(())
