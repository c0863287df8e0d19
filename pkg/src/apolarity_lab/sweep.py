"""Randomized sweep harness: generic quotients over a parameter grid, each
audited against the two-sided bounds, emitted as comma-separated records.

Record seeds derive from (master seed, r, e, t, trial, d, c), so the output
file is byte-identical across runs of the same configuration and records are
independent of execution order (trials could run in parallel; this
implementation runs them serially in deterministic index order).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import IO, Sequence

from .bounds import bounds_report, check_within
from .constructions import generic_forms_presentation
from .errors import InvalidParameter
from .field import DEFAULT_PRIME, PrimeField, SeededRng, derive_seed
from .forms import degree_dimension
from .hvector import HVector
from .inverse_system import generic_quotient, hvector

logger = logging.getLogger(__name__)

CSV_HEADER = (
    "r,e,t,d,c,seed,ambient_h,quotient_H,lower_int,upper,within,lower_gap,upper_gap"
)


@dataclass(frozen=True)
class SweepConfig:
    """Inclusive parameter ranges plus trial count and master seed."""

    r_range: tuple
    e_range: tuple
    t_range: tuple
    trials: int
    seed: int
    prime: int = DEFAULT_PRIME
    max_columns: int = 5000

    def __post_init__(self):
        for name, (lo, hi) in (
            ("r", self.r_range),
            ("e", self.e_range),
            ("t", self.t_range),
        ):
            if lo < 1:
                raise InvalidParameter(f"{name} range must start at >= 1, got {lo}")
        if self.trials < 0:
            raise InvalidParameter("trials must be >= 0")


@dataclass
class SweepRecord:
    """One audited generic quotient.

    lower_int and upper carry the leading 1 (display convention); the gap
    vectors cover indices 1..d: lower_gap[i-1] = H_i - lower_int_i and
    upper_gap[i-1] = upper_i - H_i, both non-negative exactly when the record
    is within bounds.
    """

    r: int
    e: int
    t: int
    d: int
    c: int
    seed: int
    ambient_h: HVector
    quotient_H: HVector
    lower_int: tuple
    upper: tuple
    within: bool
    lower_gap: tuple
    upper_gap: tuple


@dataclass
class SweepSummary:
    records: int
    violations: int
    min_lower_gap: int | None
    mean_lower_gap: float | None
    min_upper_gap: int | None
    mean_upper_gap: float | None
    skips: tuple


def _vec(values: Sequence[int]) -> str:
    return "-".join(str(v) for v in values)


def record_to_csv(rec: SweepRecord) -> str:
    return ",".join(
        [
            str(rec.r),
            str(rec.e),
            str(rec.t),
            str(rec.d),
            str(rec.c),
            str(rec.seed),
            _vec(rec.ambient_h),
            _vec(rec.quotient_H),
            _vec(rec.lower_int),
            _vec(rec.upper),
            "true" if rec.within else "false",
            _vec(rec.lower_gap),
            _vec(rec.upper_gap),
        ]
    )


def _inclusive(rng: tuple) -> range:
    lo, hi = rng
    return range(lo, hi + 1)


def run_sweep(config: SweepConfig):
    """Run the grid; returns (records, summary).

    Grid cells whose coordinate space exceeds max_columns, or where t
    independent degree-e forms cannot exist, are skipped with a logged reason
    (the sweep keeps going; skips are listed in the summary).
    """
    fp = PrimeField(config.prime)
    records = []
    skips = []
    lower_gaps = []
    upper_gaps = []
    violations = 0
    for r in _inclusive(config.r_range):
        for e in _inclusive(config.e_range):
            dim_e = degree_dimension(r, e)
            for t in _inclusive(config.t_range):
                if dim_e > config.max_columns:
                    reason = (
                        f"r={r} e={e} t={t}: {dim_e} columns exceed ceiling "
                        f"{config.max_columns}"
                    )
                    logger.warning("skipping %s", reason)
                    skips.append(reason)
                    continue
                if t > dim_e:
                    reason = (
                        f"r={r} e={e} t={t}: no {t} independent forms in "
                        f"dimension {dim_e}"
                    )
                    logger.info("skipping %s", reason)
                    skips.append(reason)
                    continue
                for trial in range(config.trials):
                    ambient_rng = SeededRng(
                        derive_seed(config.seed, r, e, t, trial)
                    )
                    ambient = generic_forms_presentation(r, e, t, fp, ambient_rng)
                    h = hvector(ambient)
                    for d in range(1, e + 1):
                        for c in range(1, h[d] + 1):
                            rec_seed = derive_seed(
                                config.seed, r, e, t, trial, d, c
                            )
                            quotient = generic_quotient(
                                ambient, d, c, SeededRng(rec_seed)
                            )
                            H = hvector(quotient)
                            report = bounds_report(h, d, c)
                            verdict = check_within(H, h, d, c)
                            lgap = tuple(
                                H[i] - report.lower_int[i - 1]
                                for i in range(1, d + 1)
                            )
                            ugap = tuple(
                                report.upper[i - 1] - H[i]
                                for i in range(1, d + 1)
                            )
                            records.append(
                                SweepRecord(
                                    r=r,
                                    e=e,
                                    t=t,
                                    d=d,
                                    c=c,
                                    seed=rec_seed,
                                    ambient_h=h,
                                    quotient_H=H,
                                    lower_int=report.lower_display,
                                    upper=report.upper_display,
                                    within=verdict.passed,
                                    lower_gap=lgap,
                                    upper_gap=ugap,
                                )
                            )
                            lower_gaps.extend(lgap)
                            upper_gaps.extend(ugap)
                            if not verdict.passed:
                                violations += 1
                                logger.error(
                                    "bounds violated at r=%d e=%d t=%d d=%d "
                                    "c=%d seed=%d (indices %s)",
                                    r, e, t, d, c, rec_seed,
                                    verdict.failing_indices(),
                                )
    summary = SweepSummary(
        records=len(records),
        violations=violations,
        min_lower_gap=min(lower_gaps) if lower_gaps else None,
        mean_lower_gap=sum(lower_gaps) / len(lower_gaps) if lower_gaps else None,
        min_upper_gap=min(upper_gaps) if upper_gaps else None,
        mean_upper_gap=sum(upper_gaps) / len(upper_gaps) if upper_gaps else None,
        skips=tuple(skips),
    )
    return records, summary


def write_records(records: Sequence[SweepRecord], target: str | IO[str]) -> None:
    """Write header plus one CSV line per record (the deterministic artifact)."""
    lines = [CSV_HEADER] + [record_to_csv(rec) for rec in records]
    text = "\n".join(lines) + "\n"
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
