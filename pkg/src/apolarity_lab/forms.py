"""Sparse homogeneous forms in dual variables y_1..y_r and the differentiation
action of x-monomials on them.

Monomials are exponent tuples. The project-wide monomial order is descending
lexicographic on exponent vectors, so (d, 0, ..., 0) has rank 0 and
(0, ..., 0, d) has rank dim - 1; every matrix layout and serialized document
uses this order, which makes outputs reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import (
    DegreeExceeded,
    IndexOutOfRange,
    InvalidParameter,
    VariableMismatch,
    ZeroForm,
)
from .field import PrimeField

Monomial = tuple  # exponent vector; degree is its sum


def degree_dimension(r: int, d: int) -> int:
    """Number of degree-d monomials in r variables: C(d + r - 1, r - 1)."""
    return math.comb(d + r - 1, r - 1)


def monomials_of_degree(r: int, d: int) -> Iterator[Monomial]:
    """Yield all degree-d exponent vectors in rank order (descending lex)."""
    if r == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(r - 1, d - first):
            yield (first,) + rest


def monomial_rank(m: Sequence[int]) -> int:
    """Rank of a monomial within its (r, d) block under the project order."""
    r = len(m)
    d = sum(m)
    rank = 0
    for pos in range(r - 1):
        a = m[pos]
        rem = r - pos - 1
        # monomials whose exponent at this position is larger come first
        for j in range(a + 1, d + 1):
            rank += degree_dimension(rem, d - j)
        d -= a
    return rank


def monomial_unrank(r: int, d: int, k: int) -> Monomial:
    """Inverse of monomial_rank; raises IndexOutOfRange for k outside [0, dim)."""
    if not 0 <= k < degree_dimension(r, d):
        raise IndexOutOfRange(
            f"rank {k} out of range for degree {d} in {r} variables"
        )
    out = []
    for pos in range(r - 1):
        rem = r - pos - 1
        for a in range(d, -1, -1):
            block = degree_dimension(rem, d - a)
            if k < block:
                out.append(a)
                d -= a
                break
            k -= block
    out.append(d)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_list(r: int, d: int) -> tuple:
    return tuple(monomials_of_degree(r, d))


@lru_cache(maxsize=None)
def _monomial_index(r: int, d: int) -> dict:
    return {m: i for i, m in enumerate(_monomial_list(r, d))}


@dataclass
class Form:
    """Homogeneous form: sparse map from exponent vectors to nonzero residues.

    Invariants: every stored monomial has degree == self.degree, and no stored
    coefficient is zero. Forms are treated as immutable after construction.
    """

    num_vars: int
    degree: int
    terms: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.num_vars < 1:
            raise InvalidParameter("num_vars must be >= 1")
        if self.degree < 0:
            raise InvalidParameter("degree must be >= 0")
        clean = {}
        for mono, coeff in self.terms.items():
            mono = tuple(int(a) for a in mono)
            if len(mono) != self.num_vars:
                raise VariableMismatch(
                    f"monomial {mono} has {len(mono)} exponents, expected "
                    f"{self.num_vars}"
                )
            if any(a < 0 for a in mono):
                raise InvalidParameter(f"negative exponent in {mono}")
            if sum(mono) != self.degree:
                raise InvalidParameter(
                    f"monomial {mono} has degree {sum(mono)}, form declares "
                    f"{self.degree}"
                )
            coeff = int(coeff)
            if coeff != 0:
                clean[mono] = coeff
        self.terms = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        """Terms in rank order (the canonical presentation order)."""
        return sorted(self.terms.items(), key=lambda kv: monomial_rank(kv[0]))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = "".join(
                f"y{i + 1}" if a == 1 else f"y{i + 1}^{a}"
                for i, a in enumerate(mono)
                if a
            )
            parts.append(f"{coeff}*{factors}" if factors else str(coeff))
        return " + ".join(parts)


def _falling_factorial(m: int, a: int) -> int:
    out = 1
    for j in range(a):
        out *= m - j
    return out


def differentiate(op: Sequence[int], form: Form, fp: PrimeField) -> Form:
    """Apply the differential operator x^op to a form in the y variables.

    Each x_i acts as partial differentiation with respect to y_i, so the term
    c * y^m maps to c * prod_k m_k (m_k - 1) ... (m_k - a_k + 1) * y^(m - op),
    reduced into F_p. Returns the zero form when every term dies.
    """
    op = tuple(int(a) for a in op)
    if len(op) != form.num_vars:
        raise VariableMismatch(
            f"operator has {len(op)} variables, form has {form.num_vars}"
        )
    order = sum(op)
    if order > form.degree:
        raise DegreeExceeded(
            f"operator degree {order} exceeds form degree {form.degree}"
        )
    out = {}
    for mono, coeff in form.terms.items():
        if any(m < a for m, a in zip(mono, op)):
            continue
        scalar = coeff
        for m, a in zip(mono, op):
            if a:
                scalar = (scalar * _falling_factorial(m, a)) % fp.p
        if scalar == 0:
            continue
        target = tuple(m - a for m, a in zip(mono, op))
        new = (out.get(target, 0) + scalar) % fp.p
        if new:
            out[target] = new
        else:
            out.pop(target, None)
    return Form(form.num_vars, form.degree - order, out)


def power_of_linear_form(coeffs: Sequence[int], e: int, fp: PrimeField) -> Form:
    """Expand (c_1 y_1 + ... + c_r y_r)**e with multinomial coefficients in F_p."""
    coeffs = [fp.reduce(int(c)) for c in coeffs]
    r = len(coeffs)
    if r < 1:
        raise InvalidParameter("need at least one variable")
    if e < 1:
        raise InvalidParameter("exponent must be >= 1")
    if all(c == 0 for c in coeffs):
        raise ZeroForm("all linear-form coefficients are zero")
    fact = math.factorial(e)
    terms = {}
    for mono in monomials_of_degree(r, e):
        scalar = fact
        for a in mono:
            scalar //= math.factorial(a)
        scalar %= fp.p
        for c, a in zip(coeffs, mono):
            if a:
                scalar = (scalar * pow(c, a, fp.p)) % fp.p
            if scalar == 0:
                break
        if scalar:
            terms[mono] = scalar
    return Form(r, e, terms)


def sum_forms(forms: Sequence[Form], fp: PrimeField) -> Form:
    """Sum of same-degree forms over F_p (general arithmetic is out of scope,
    but power-sum generators need this one combination)."""
    if not forms:
        raise InvalidParameter("nothing to sum")
    r, d = forms[0].num_vars, forms[0].degree
    acc: dict = {}
    for f in forms:
        if f.num_vars != r:
            raise VariableMismatch("summands live in different variable counts")
        if f.degree != d:
            raise InvalidParameter("summands have mixed degrees")
        for mono, coeff in f.terms.items():
            new = (acc.get(mono, 0) + coeff) % fp.p
            if new:
                acc[mono] = new
            else:
                acc.pop(mono, None)
    return Form(r, d, acc)


def form_to_coord_row(form: Form) -> np.ndarray:
    """Dense coefficient row of length C(degree + r - 1, r - 1) in rank order."""
    row = np.zeros(degree_dimension(form.num_vars, form.degree), dtype=np.int64)
    index = _monomial_index(form.num_vars, form.degree)
    for mono, coeff in form.terms.items():
        row[index[mono]] = coeff
    return row


def coord_row_to_form(row: Sequence[int], r: int, d: int) -> Form:
    """Inverse of form_to_coord_row."""
    monos = _monomial_list(r, d)
    if len(row) != len(monos):
        raise IndexOutOfRange(
            f"row length {len(row)} != dimension {len(monos)} for (r={r}, d={d})"
        )
    terms = {monos[i]: int(c) for i, c in enumerate(row) if c}
    return Form(r, d, terms)


@lru_cache(maxsize=None)
def derivative_index_maps(r: int, d: int) -> tuple:
    """Coordinate maps for single partial derivatives from degree d to d - 1.

    For each variable k returns (src, dst, mult) index arrays: a coefficient
    row v of degree d maps under d/dy_k to the degree-(d-1) row with
    out[dst] = mult * v[src], where mult is the exponent of y_k. The map is
    injective per variable, so plain fancy-index assignment is safe.
    """
    if d < 1:
        raise InvalidParameter("no derivatives below degree 1")
    monos = _monomial_list(r, d)
    lower = _monomial_index(r, d - 1)
    maps = []
    for k in range(r):
        src, dst, mult = [], [], []
        for i, m in enumerate(monos):
            if m[k]:
                src.append(i)
                reduced = m[:k] + (m[k] - 1,) + m[k + 1 :]
                dst.append(lower[reduced])
                mult.append(m[k])
        maps.append(
            (
                np.array(src, dtype=np.intp),
                np.array(dst, dtype=np.intp),
                np.array(mult, dtype=np.int64),
            )
        )
    return tuple(maps)


def first_derivative_rows(rows: np.ndarray, r: int, d: int, fp: PrimeField) -> np.ndarray:
    """All single-variable derivative images of the given degree-d rows.

    Stacks d/dy_k applied to every row for k = 1..r; output has
    rows.shape[0] * r rows over degree-(d-1) coordinates. Entries stay below
    p * d, well inside int64.
    """
    n = rows.shape[0]
    out = np.zeros((n * r, degree_dimension(r, d - 1)), dtype=np.int64)
    for k, (src, dst, mult) in enumerate(derivative_index_maps(r, d)):
        out[k * n : (k + 1) * n, dst] = (rows[:, src] * mult) % fp.p
    return out
