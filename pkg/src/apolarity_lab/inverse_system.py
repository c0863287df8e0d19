"""Inverse-system engine: graded derivative spaces, h-vectors, truncation
bases, and generic level quotients.

A level algebra of type t and socle degree e is presented by t linearly
independent degree-e forms generating a submodule of the dual polynomial ring
under the differentiation action. The h-vector entry h_i is the number of
linearly independent order-(e - i) partial derivatives of the generators.

Derivative spaces are computed descending one degree at a time: the degree-i
space is the row space of all single partial derivatives of the degree-(i+1)
RREF basis. Because partials commute and spans absorb scalar factors (all
nonzero, since p exceeds the socle degree), this equals the span of all
order-(e - i) derivatives of the generators while keeping the row count per
elimination bounded by r times the previous rank.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .errors import (
    DegreeOutOfRange,
    DependentGenerators,
    InvalidParameter,
    MixedDegrees,
    MixedVariableCounts,
    TypeTooLarge,
    ZeroForm,
)
from .field import PrimeField, SeededRng
from .forms import Form, coord_row_to_form, first_derivative_rows, form_to_coord_row
from .hvector import HVector
from .linalg import ReducedBasis, random_combinations, rref


@dataclass
class DerivativeSpace:
    """Degree-graded piece of the derivative closure, as an RREF basis over
    degree-`degree` monomial coordinates."""

    degree: int
    basis: ReducedBasis

    @property
    def rank(self) -> int:
        return self.basis.rank


@dataclass
class LevelPresentation:
    """Inverse-system presentation: t forms of one degree e in r variables.

    Linear independence of the generators (minimal generation) is verified by
    validate_level, not by the constructor. Treated as immutable; the
    derivative-space chain is cached on first use.
    """

    fp: PrimeField
    num_vars: int
    socle_degree: int
    generators: tuple

    _spaces: tuple | None = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.generators = tuple(self.generators)
        if not self.generators:
            raise InvalidParameter("presentation needs at least one generator")
        if self.socle_degree < 1:
            raise InvalidParameter(
                "socle degree must be >= 1; a degree-0 algebra is just the field"
            )
        self.fp.check_socle_degree(self.socle_degree)
        for g in self.generators:
            if not isinstance(g, Form):
                raise InvalidParameter(f"generator {g!r} is not a Form")
            if g.num_vars != self.num_vars:
                raise MixedVariableCounts(
                    f"generator in {g.num_vars} variables, presentation declares "
                    f"{self.num_vars}"
                )
            if g.degree != self.socle_degree:
                raise MixedDegrees(
                    f"generator of degree {g.degree}, presentation declares "
                    f"{self.socle_degree}"
                )
            if g.is_zero:
                raise ZeroForm("zero form cannot be a generator")

    @property
    def type(self) -> int:
        return len(self.generators)

    def generator_matrix(self) -> np.ndarray:
        return np.vstack([form_to_coord_row(g) for g in self.generators])


def validate_level(pres: LevelPresentation) -> int:
    """Confirm minimal generation and return the type t.

    Raises DependentGenerators naming the first generator that lies in the
    span of its predecessors.
    """
    rows = pres.generator_matrix()
    full = rref(rows, pres.fp.p)
    if full.rank < len(rows):
        for j in range(1, len(rows)):
            if rref(rows[: j + 1], pres.fp.p).rank <= j:
                raise DependentGenerators(j)
        raise DependentGenerators(0)
    return pres.type


def derivative_spaces(pres: LevelPresentation) -> tuple:
    """The full chain of derivative spaces, degrees 0..e (cached)."""
    if pres._spaces is not None:
        return pres._spaces
    e, r, fp = pres.socle_degree, pres.num_vars, pres.fp
    spaces = [None] * (e + 1)
    top = rref(pres.generator_matrix(), fp.p)
    spaces[e] = DerivativeSpace(e, top)
    for i in range(e - 1, -1, -1):
        rows = first_derivative_rows(spaces[i + 1].basis.matrix, r, i + 1, fp)
        spaces[i] = DerivativeSpace(i, rref(rows, fp.p))
    pres._spaces = tuple(spaces)
    return pres._spaces


def derivative_space(pres: LevelPresentation, i: int) -> DerivativeSpace:
    """Basis of the span of all order-(e - i) derivatives of the generators."""
    if not 0 <= i <= pres.socle_degree:
        raise DegreeOutOfRange(
            f"degree {i} outside [0, {pres.socle_degree}]"
        )
    return derivative_spaces(pres)[i]


def hvector(pres: LevelPresentation) -> HVector:
    """h-vector: per-degree ranks of the derivative spaces."""
    validate_level(pres)
    return HVector(space.rank for space in derivative_spaces(pres))


def truncation_basis(pres: LevelPresentation, d: int) -> list:
    """Canonical degree-d generators of the truncated inverse system.

    Converts the RREF basis of the degree-d derivative space back to forms;
    as a new presentation these generate exactly the truncation of the
    algebra at degree d, whose h-vector agrees with the ambient one up to d.
    """
    if not 1 <= d <= pres.socle_degree:
        raise DegreeOutOfRange(
            f"truncation degree {d} outside [1, {pres.socle_degree}]"
        )
    space = derivative_space(pres, d)
    return [
        coord_row_to_form(space.basis.matrix[k], pres.num_vars, d)
        for k in range(space.rank)
    ]


def truncation(pres: LevelPresentation, d: int) -> LevelPresentation:
    """The truncated algebra at degree d as a presentation of its own."""
    return LevelPresentation(
        pres.fp, pres.num_vars, d, tuple(truncation_basis(pres, d))
    )


def generic_quotient(
    pres: LevelPresentation, d: int, c: int, rng: SeededRng
) -> LevelPresentation:
    """Generic level quotient of type c and socle degree d.

    Generators are c random combinations of the degree-d truncation basis;
    the result re-enters the system as an ordinary presentation of socle
    degree d and type c.
    """
    if not 1 <= d <= pres.socle_degree:
        raise DegreeOutOfRange(f"degree {d} outside [1, {pres.socle_degree}]")
    space = derivative_space(pres, d)
    if c > space.rank:
        raise TypeTooLarge(
            f"type {c} exceeds h_{d} = {space.rank} of the truncation"
        )
    rows = random_combinations(space.basis, c, pres.fp, rng)
    gens = tuple(coord_row_to_form(rows[k], pres.num_vars, d) for k in range(c))
    return LevelPresentation(pres.fp, pres.num_vars, d, gens)
