"""Two-sided bounds for the h-vector H of a relatively compressed level
quotient of socle degree d and type c of an ambient level algebra with
h-vector h = (1, h_1, ..., h_e):

    ((h_d - c) * h_{d-i} + (c * h_d - 1) * h_i) / (h_d**2 - 1)
        <= H_i <= min(h_i, c * h_{d-i})        for i = 1..d.

The lower bound is reported both as an exact rational and as its integer
ceiling; both ends pinch to c at i = d. The degenerate case h_d = 1 (zero
denominator) forces c = 1 and the truncation is already Gorenstein, so the
exact answer H_i = h_i is reported with a flag instead of evaluating the
formula. All arithmetic is arbitrary-precision; overflow is categorically
excluded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegreeOutOfRange, InvalidParameter, ShapeMismatch, TypeTooLarge
from .hvector import HVector

RationalValue = Fraction  # stored reduced with positive denominator, by construction


def _check_args(h: Sequence[int], d: int, c: int) -> None:
    e = len(h) - 1
    if not 1 <= d <= e:
        raise DegreeOutOfRange(f"socle degree d={d} outside [1, {e}]")
    if c < 1:
        raise InvalidParameter(f"type c={c} must be >= 1")
    if c > h[d]:
        raise TypeTooLarge(f"type c={c} exceeds h_d = {h[d]}")


def lower_bound(h: Sequence[int], d: int, c: int):
    """Exact rational lower bounds and their ceilings, indexed i = 1..d.

    Returns (lower_exact, lower_int), both tuples of length d. For h_d = 1
    the formula's denominator vanishes; c = 1 is then forced and the
    truncated h-vector itself is returned (the degenerate Gorenstein case).
    """
    _check_args(h, d, c)
    if h[d] == 1:
        exact = tuple(Fraction(h[i]) for i in range(1, d + 1))
        return exact, tuple(h[i] for i in range(1, d + 1))
    denom = h[d] * h[d] - 1
    exact = tuple(
        Fraction((h[d] - c) * h[d - i] + (c * h[d] - 1) * h[i], denom)
        for i in range(1, d + 1)
    )
    return exact, tuple(math.ceil(v) for v in exact)


def upper_bound(h: Sequence[int], d: int, c: int) -> tuple:
    """upper[i] = min(h_i, c * h_{d-i}) for i = 1..d."""
    _check_args(h, d, c)
    return tuple(min(h[i], c * h[d - i]) for i in range(1, d + 1))


@dataclass
class BoundsReport:
    """Both bounds for one (h, d, c) query.

    lower_exact, lower_int and upper are indexed i = 1..d; display forms
    prepend H_0 = 1. degenerate_case marks the h_d = 1 branch.
    """

    h: HVector
    d: int
    c: int
    lower_exact: tuple
    lower_int: tuple
    upper: tuple
    degenerate_case: bool

    @property
    def lower_display(self) -> tuple:
        return (1,) + self.lower_int

    @property
    def upper_display(self) -> tuple:
        return (1,) + self.upper


def bounds_report(h: Sequence[int], d: int, c: int) -> BoundsReport:
    """Aggregate lower and upper bounds into one report."""
    h = HVector(h)
    lower_exact, lower_int = lower_bound(h, d, c)
    return BoundsReport(
        h=h,
        d=d,
        c=c,
        lower_exact=lower_exact,
        lower_int=lower_int,
        upper=upper_bound(h, d, c),
        degenerate_case=(h[d] == 1),
    )


@dataclass
class ContainmentCheck:
    """Per-index verdicts for a candidate quotient h-vector."""

    lower_ok: tuple
    upper_ok: tuple

    @property
    def passed(self) -> bool:
        return all(self.lower_ok) and all(self.upper_ok)

    def failing_indices(self) -> tuple:
        return tuple(
            i + 1
            for i, (lo, up) in enumerate(zip(self.lower_ok, self.upper_ok))
            if not (lo and up)
        )


def check_within(H: Sequence[int], h: Sequence[int], d: int, c: int) -> ContainmentCheck:
    """Check lower_int <= H_i <= upper entrywise for i = 1..d.

    H must have socle degree d and top entry c.
    """
    H = HVector(H)
    if len(H) != d + 1:
        raise ShapeMismatch(f"candidate has length {len(H)}, expected {d + 1}")
    if H[d] != c:
        raise ShapeMismatch(f"candidate has H_d = {H[d]}, expected type {c}")
    report = bounds_report(h, d, c)
    lower_ok = tuple(H[i] >= report.lower_int[i - 1] for i in range(1, d + 1))
    upper_ok = tuple(H[i] <= report.upper[i - 1] for i in range(1, d + 1))
    return ContainmentCheck(lower_ok=lower_ok, upper_ok=upper_ok)
