"""Independent recomputation of engine results.

Two separate routes are checked against the fast pipeline:
  1. h-vectors via literal operator enumeration: apply every monomial
     operator of each order to every generator with `differentiate`, then
     rank the stacked rows with sympy over GF(p).
  2. row reduction itself against sympy's DomainMatrix rref.
Both oracles avoid the package's own elimination code entirely.
"""

import random

import numpy as np
import pytest
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from apolarity_lab import (
    Form,
    LevelPresentation,
    PrimeField,
    SeededRng,
    differentiate,
    generic_forms_presentation,
    generic_quotient,
    hvector,
    monomials_of_degree,
    power_sum_presentation,
    PowerSumSpec,
    remark5_family,
    Remark5Params,
    rref,
)
from apolarity_lab.forms import form_to_coord_row

ORACLE_PRIME = 101


def _sympy_rank(rows, p) -> int:
    if not rows:
        return 0
    return DomainMatrix.from_list([list(map(int, r)) for r in rows], GF(p)).rank()


def oracle_hvector(pres) -> tuple:
    """Rank of all order-(e - i) derivatives of the generators, per degree i."""
    e = pres.socle_degree
    r = pres.num_vars
    out = []
    for i in range(e + 1):
        rows = []
        for op in monomials_of_degree(r, e - i):
            for gen in pres.generators:
                image = differentiate(op, gen, pres.fp)
                rows.append(form_to_coord_row(image).tolist())
        out.append(_sympy_rank(rows, pres.fp.p))
    return tuple(out)


@pytest.fixture(scope="module")
def fpo():
    return PrimeField(ORACLE_PRIME)


def test_oracle_on_hand_case(fpo):
    pres = LevelPresentation(fpo, 2, 3, (Form(2, 3, {(2, 1): 1}),))
    assert oracle_hvector(pres) == (1, 2, 2, 1)


@pytest.mark.parametrize("r,e,t", [(2, 3, 1), (2, 4, 2), (3, 3, 2), (3, 4, 1)])
def test_generic_instances_match_oracle(fpo, r, e, t):
    for seed in range(3):
        pres = generic_forms_presentation(r, e, t, fpo, SeededRng(seed))
        assert tuple(hvector(pres)) == oracle_hvector(pres)


def test_block_family_matches_oracle(fpo):
    pres = remark5_family(Remark5Params(t=1, block=1, e=4), fpo)
    assert tuple(hvector(pres)) == oracle_hvector(pres)


def test_power_sum_matches_oracle(fpo):
    spec = PowerSumSpec.all_generic(3, 4, [4, 1])
    pres = power_sum_presentation(spec, fpo, SeededRng(2))
    assert tuple(hvector(pres)) == oracle_hvector(pres)


def test_quotient_matches_oracle(fpo):
    pres = generic_forms_presentation(3, 4, 2, fpo, SeededRng(9))
    quotient = generic_quotient(pres, 3, 2, SeededRng(10))
    assert tuple(hvector(quotient)) == oracle_hvector(quotient)


@pytest.mark.parametrize("p", [7, 101])
def test_rref_matches_sympy(p):
    rng = random.Random(p)
    for _ in range(15):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 10)
        mat = [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
        mine = rref(np.array(mat, dtype=np.int64), p)
        reduced, pivots = DomainMatrix.from_list(mat, GF(p)).rref()
        dense = [
            [int(e) % p for e in row] for row in reduced.to_list()
        ]
        nonzero = [row for row in dense if any(row)]
        assert mine.rank == len(pivots) == len(nonzero)
        assert mine.pivot_cols == tuple(pivots)
        assert mine.matrix.tolist() == nonzero
