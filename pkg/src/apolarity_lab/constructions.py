"""Builders for the explicit families used by the verification suites: the
lower-bound-sharp block family, power-sum presentations, the compressed
closed-form h-vector, the upper-bound-sharp ternary-septics pair, and the
equal-h-vector pair with distinct relatively compressed quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DependentGenerators, InvalidParameter, TypeTooLarge, ZeroForm
from .field import PrimeField, SeededRng
from .forms import (
    Form,
    degree_dimension,
    differentiate,
    monomials_of_degree,
    power_of_linear_form,
    sum_forms,
)
from .hvector import HVector
from .inverse_system import LevelPresentation, validate_level

#: marks a power-sum summand whose linear-form coefficients are drawn at random
GENERIC = "generic"


@dataclass(frozen=True)
class Remark5Params:
    """Parameters of the sharp block family: type t, shared block size, socle
    degree e >= 3; the ambient variable count is (t + 1) * block."""

    t: int
    block: int
    e: int

    def __post_init__(self):
        if self.t < 1:
            raise InvalidParameter("type t must be >= 1")
        if self.block < 1:
            raise InvalidParameter("block size must be >= 1")
        if self.e < 3:
            raise InvalidParameter("socle degree must be >= 3 for this family")

    @property
    def num_vars(self) -> int:
        return (self.t + 1) * self.block


def remark5_family(params: Remark5Params, fp: PrimeField) -> LevelPresentation:
    """The lower-bound-sharp family of type t and socle degree e.

    Generator j (1-based, j = 1..t) is the sum over m = 1..block of
    y_{j*block+m} * y_m^(e-1): the variables y_1..y_block are shared across
    generators, and each generator owns its private block. Internally the
    1-based variable index v maps to coordinate v - 1.
    """
    b, e, t = params.block, params.e, params.t
    gens = []
    for j in range(1, t + 1):
        terms = {}
        for m in range(1, b + 1):
            exps = [0] * params.num_vars
            exps[m - 1] = e - 1
            exps[j * b + m - 1] += 1
            terms[tuple(exps)] = 1
        gens.append(Form(params.num_vars, e, terms))
    return LevelPresentation(fp, params.num_vars, e, tuple(gens))


def expected_remark5_h(params: Remark5Params) -> HVector:
    """Closed form (1, (t+1)b, ..., (t+1)b, t) for the block family."""
    mid = (params.t + 1) * params.block
    return HVector((1,) + (mid,) * (params.e - 1) + (params.t,))


def expected_remark5_quotient_h(params: Remark5Params, c: int) -> HVector:
    """Closed form (1, (c+1)b, ..., (c+1)b, c) for its type-c level quotients."""
    if not 1 <= c <= params.t:
        raise TypeTooLarge(f"quotient type {c} outside [1, {params.t}]")
    mid = (c + 1) * params.block
    return HVector((1,) + (mid,) * (params.e - 1) + (c,))


@dataclass(frozen=True)
class PowerSumSpec:
    """Power-sum presentation: each group of summands yields one generator,
    the sum of the e-th powers of its linear forms. A summand is either an
    explicit coefficient vector of length num_vars or the GENERIC marker."""

    num_vars: int
    degree: int
    groups: tuple

    def __post_init__(self):
        if self.num_vars < 1 or self.degree < 1:
            raise InvalidParameter("need num_vars >= 1 and degree >= 1")
        if not self.groups or any(not g for g in self.groups):
            raise InvalidParameter("every generator needs at least one summand")
        for group in self.groups:
            for summand in group:
                if summand is GENERIC:
                    continue
                if len(summand) != self.num_vars:
                    raise InvalidParameter(
                        f"summand {summand} has {len(summand)} coefficients, "
                        f"expected {self.num_vars}"
                    )

    @classmethod
    def all_generic(cls, num_vars: int, degree: int, group_sizes: Sequence[int]):
        """Spec with the given numbers of generic summands per generator."""
        return cls(
            num_vars, degree, tuple((GENERIC,) * int(s) for s in group_sizes)
        )


def _random_linear_form(num_vars: int, fp: PrimeField, rng: SeededRng) -> tuple:
    for _ in range(3):
        coeffs = tuple(fp.random_element(rng) for _ in range(num_vars))
        if any(coeffs):
            return coeffs
    raise ZeroForm("random linear form kept drawing all zeros")  # p >= 2 makes this unreachable in practice


def power_sum_presentation(
    spec: PowerSumSpec, fp: PrimeField, rng: SeededRng
) -> LevelPresentation:
    """Presentation whose generators are sums of e-th powers of linear forms.

    Generic summands are redrawn (up to 3 attempts) if the resulting
    generators come out linearly dependent.
    """
    last_error = None
    for _ in range(3):
        gens = []
        for group in spec.groups:
            powers = []
            for summand in group:
                coeffs = (
                    _random_linear_form(spec.num_vars, fp, rng)
                    if summand is GENERIC
                    else summand
                )
                powers.append(power_of_linear_form(coeffs, spec.degree, fp))
            gens.append(sum_forms(powers, fp))
        pres = LevelPresentation(fp, spec.num_vars, spec.degree, tuple(gens))
        try:
            validate_level(pres)
            return pres
        except DependentGenerators as exc:
            last_error = exc
            if not any(s is GENERIC for g in spec.groups for s in g):
                raise  # nothing to redraw
    raise last_error


def compressed_hvector(r: int, e: int, t: int) -> HVector:
    """Entrywise minimum h_i = min(dim_i, t * dim_{e-i}): the h-vector of a
    compressed level algebra of codimension r, socle degree e and type t."""
    if r < 1 or e < 1 or t < 1:
        raise InvalidParameter("need r, e, t all >= 1")
    return HVector(
        min(degree_dimension(r, i), t * degree_dimension(r, e - i))
        for i in range(e + 1)
    )


def generic_forms_presentation(
    r: int, e: int, t: int, fp: PrimeField, rng: SeededRng
) -> LevelPresentation:
    """t independent dense random forms of degree e: a generic level
    presentation, compressed with overwhelming probability.

    Requires t <= dim_e; dependent draws are retried up to 3 times.
    """
    dim_e = degree_dimension(r, e)
    if t > dim_e:
        raise TypeTooLarge(
            f"cannot pick {t} independent forms in dimension {dim_e}"
        )
    monos = list(monomials_of_degree(r, e))
    last_error = None
    for _ in range(3):
        gens = []
        for _ in range(t):
            terms = {m: fp.random_element(rng) for m in monos}
            form = Form(r, e, terms)
            if form.is_zero:  # probability ~ p**-dim, retry via dependence path
                break
            gens.append(form)
        if len(gens) < t:
            continue
        pres = LevelPresentation(fp, r, e, tuple(gens))
        try:
            validate_level(pres)
            return pres
        except DependentGenerators as exc:
            last_error = exc
    raise last_error


def remark5_upper_sharp(fp: PrimeField, rng: SeededRng):
    """Upper-bound-sharp pair: two generic ternary septics and the degree-6
    quotient generated by the y_1-derivative of the first and the
    y_2-derivative of the second.

    Returns (ambient, quotient) presentations. The ambient h-vector matches
    compressed_hvector(3, 7, 2); the quotient h-vector attains the upper
    bound at every index.
    """
    last_error = None
    for _ in range(3):
        ambient = generic_forms_presentation(3, 7, 2, fp, rng)
        f, g = ambient.generators
        quotient_gens = (
            differentiate((1, 0, 0), f, fp),
            differentiate((0, 1, 0), g, fp),
        )
        if any(q.is_zero for q in quotient_gens):
            continue
        quotient = LevelPresentation(fp, 3, 6, quotient_gens)
        try:
            validate_level(quotient)
            return ambient, quotient
        except DependentGenerators as exc:
            last_error = exc
    raise last_error


def remark6_pair(t: int, block: int, e: int, fp: PrimeField, rng: SeededRng):
    """Two presentations with equal h-vectors but different relatively
    compressed Gorenstein quotients.

    The first is the sparse block family. The second lives in the same
    (t+1)*block variables with t power-sum generators: one is the sum of
    e-th powers of (t+1)*block - (t-1) generic linear forms, the remaining
    t - 1 are single generic e-th powers. Requires t > 1 and block > 1 (the
    strict-separation range) and e >= 3.
    """
    if t <= 1 or block <= 1:
        raise InvalidParameter("separation needs t > 1 and block > 1")
    params = Remark5Params(t=t, block=block, e=e)
    family = remark5_family(params, fp)
    r = params.num_vars
    spec = PowerSumSpec.all_generic(r, e, [r - (t - 1)] + [1] * (t - 1))
    power = power_sum_presentation(spec, fp, rng)
    return family, power


def remark6_designated_quotient(pres: LevelPresentation) -> LevelPresentation:
    """The Gorenstein quotient generated by the first (power-sum-rich)
    generator alone, not a generic combination."""
    return LevelPresentation(
        pres.fp, pres.num_vars, pres.socle_degree, (pres.generators[0],)
    )
