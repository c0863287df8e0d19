"""Built-in verification suites.

Each suite recomputes a set of known-answer cases from scratch and compares
against frozen expected values. Suite names (example4, remark5, remark6) are
the stable tokens exposed by the command line; each groups the checks for one
reference construction family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import bounds_report, check_within
from .constructions import (
    Remark5Params,
    compressed_hvector,
    expected_remark5_h,
    expected_remark5_quotient_h,
    remark5_family,
    remark5_upper_sharp,
    remark6_designated_quotient,
    remark6_pair,
)
from .errors import InvalidParameter
from .field import PrimeField, SeededRng, derive_seed
from .hvector import HVector
from .inverse_system import generic_quotient, hvector

SUITE_NAMES = ("example4", "remark5", "remark6")

# Reference case: h = (1,4,9,13,13,13,9,6,4), socle degree truncated to d = 6,
# quotient type c = 3. Expected bound vectors were computed by hand from the
# closed formulas and are frozen here as the known answers.
EXAMPLE4_H = HVector((1, 4, 9, 13, 13, 13, 9, 6, 4))
EXAMPLE4_D = 6
EXAMPLE4_C = 3
EXAMPLE4_LOWER = (1, 3, 4, 6, 5, 5, 3)
EXAMPLE4_UPPER = (1, 4, 9, 13, 13, 12, 3)
EXAMPLE4_LOWER_EXACT = ("91/40", "39/10", "26/5", "49/10", "181/40", "3")

# Designated two-generator septic case: ambient type 2 in 3 variables with the
# maximal h-vector, then the quotient spanned by one first derivative of each
# generator. Its h-vector meets the upper bound at every index.
SEPTICS_AMBIENT_H = HVector((1, 3, 6, 10, 15, 12, 6, 2))
SEPTICS_QUOTIENT_H = HVector((1, 3, 6, 10, 12, 6, 2))

# Separation pair at t=2, block=2, e=4: two type-2 algebras with equal
# h-vector whose type-1 quotients differ, showing the lower bound cannot be
# raised to match the upper bound in general.
REMARK6_T = 2
REMARK6_BLOCK = 2
REMARK6_E = 4
REMARK6_AMBIENT_H = HVector((1, 6, 6, 6, 2))
REMARK6_GENERIC_H = HVector((1, 4, 4, 4, 1))
REMARK6_DESIGNATED_H = HVector((1, 5, 5, 5, 1))


@dataclass
class CheckRow:
    """One named comparison; expected and computed are display strings."""

    name: str
    expected: str
    computed: str
    ok: bool


def _row(name: str, expected, computed) -> CheckRow:
    return CheckRow(
        name=name,
        expected=str(expected),
        computed=str(computed),
        ok=str(expected) == str(computed),
    )


def _fmt_vec(values) -> str:
    return ",".join(str(v) for v in values)


def suite_example4(fp: PrimeField, seed: int) -> list:
    """Bound formulas on the frozen reference h-vector (field independent)."""
    report = bounds_report(EXAMPLE4_H, EXAMPLE4_D, EXAMPLE4_C)
    exact = tuple(str(q) for q in report.lower_exact)
    return [
        _row("lower bound vector", _fmt_vec(EXAMPLE4_LOWER),
             _fmt_vec(report.lower_display)),
        _row("upper bound vector", _fmt_vec(EXAMPLE4_UPPER),
             _fmt_vec(report.upper_display)),
        _row("exact lower values", ",".join(EXAMPLE4_LOWER_EXACT),
             ",".join(exact)),
        _row("degenerate flag", False, report.degenerate_case),
    ]


def suite_remark5(fp: PrimeField, seed: int) -> list:
    """Block family grid, quotient sharpness, and the septic upper-sharp pair."""
    rows = []
    for t in range(1, 4):
        for block in range(1, 4):
            for e in range(3, 6):
                params = Remark5Params(t=t, block=block, e=e)
                pres = remark5_family(params, fp)
                expected = expected_remark5_h(params)
                computed = hvector(pres)
                rows.append(
                    _row(
                        f"family h t={t} block={block} e={e}",
                        _fmt_vec(expected),
                        _fmt_vec(computed),
                    )
                )
                for c in range(1, t + 1):
                    rng = SeededRng(derive_seed(seed, t, block, e, c))
                    quotient = generic_quotient(pres, e, c, rng)
                    qh = hvector(quotient)
                    expected_q = expected_remark5_quotient_h(params, c)
                    rows.append(
                        _row(
                            f"quotient h t={t} block={block} e={e} c={c}",
                            _fmt_vec(expected_q),
                            _fmt_vec(qh),
                        )
                    )
                    report = bounds_report(computed, e, c)
                    rows.append(
                        _row(
                            f"lower met t={t} block={block} e={e} c={c}",
                            _fmt_vec(report.lower_display),
                            _fmt_vec(qh),
                        )
                    )
    for k in range(5):
        rng = SeededRng(derive_seed(seed, "septics", k))
        ambient, quotient = remark5_upper_sharp(fp, rng)
        rows.append(
            _row(
                f"septic ambient h seed#{k}",
                _fmt_vec(SEPTICS_AMBIENT_H),
                _fmt_vec(hvector(ambient)),
            )
        )
        rows.append(
            _row(
                f"septic quotient h seed#{k}",
                _fmt_vec(SEPTICS_QUOTIENT_H),
                _fmt_vec(hvector(quotient)),
            )
        )
    rows.append(
        _row(
            "septic quotient meets upper bound",
            _fmt_vec(
                bounds_report(SEPTICS_AMBIENT_H, 6, 2).upper_display
            ),
            _fmt_vec(SEPTICS_QUOTIENT_H),
        )
    )
    rows.append(
        _row(
            "compressed h-vector r=3 e=7 t=2",
            _fmt_vec(SEPTICS_AMBIENT_H),
            _fmt_vec(compressed_hvector(3, 7, 2)),
        )
    )
    return rows


def suite_remark6(fp: PrimeField, seed: int) -> list:
    """Equal ambient h-vectors, unequal type-1 quotients."""
    rng = SeededRng(derive_seed(seed, "remark6"))
    family, power = remark6_pair(REMARK6_T, REMARK6_BLOCK, REMARK6_E, fp, rng)
    h1 = hvector(family)
    h2 = hvector(power)
    rows = [
        _row("block family h", _fmt_vec(REMARK6_AMBIENT_H), _fmt_vec(h1)),
        _row("power sum h", _fmt_vec(REMARK6_AMBIENT_H), _fmt_vec(h2)),
    ]
    q1 = generic_quotient(family, REMARK6_E, 1, rng.spawn("q1"))
    g1 = hvector(q1)
    rows.append(
        _row("generic quotient h", _fmt_vec(REMARK6_GENERIC_H), _fmt_vec(g1))
    )
    designated = remark6_designated_quotient(power)
    g2 = hvector(designated)
    rows.append(
        _row("designated quotient h", _fmt_vec(REMARK6_DESIGNATED_H),
             _fmt_vec(g2))
    )
    interior = range(1, REMARK6_E)
    rows.append(
        _row(
            "strict separation on interior degrees",
            True,
            all(g1[i] < g2[i] for i in interior),
        )
    )
    for name, qh in (("generic", g1), ("designated", g2)):
        verdict = check_within(qh, h1, REMARK6_E, 1)
        rows.append(_row(f"{name} quotient within bounds", True, verdict.passed))
    return rows


_SUITES = {
    "example4": suite_example4,
    "remark5": suite_remark5,
    "remark6": suite_remark6,
}


def run_suite(name: str, fp: PrimeField, seed: int) -> list:
    """Run one suite, or all of them in declared order for name == 'all'."""
    if name == "all":
        rows = []
        for suite in SUITE_NAMES:
            rows.extend(_SUITES[suite](fp, seed))
        return rows
    if name not in _SUITES:
        raise InvalidParameter(
            f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}"
        )
    return _SUITES[name](fp, seed)
