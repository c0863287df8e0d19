"""Acceptance suite: one test per shipped guarantee, each printing a
pass/fail line (run with -s to see them). Stated time budgets are asserted
with perf_counter around the computation under test."""

import time

import pytest

from apolarity_lab import (
    HVector,
    PrimeField,
    Remark5Params,
    SeededRng,
    bounds_report,
    compressed_hvector,
    derive_seed,
    expected_remark5_h,
    expected_remark5_quotient_h,
    generic_forms_presentation,
    generic_quotient,
    hvector,
    remark5_family,
    remark5_upper_sharp,
    remark6_designated_quotient,
    remark6_pair,
)
from apolarity_lab.cli import main
from apolarity_lab.field import DEFAULT_PRIME
from apolarity_lab.sweep import SweepConfig, run_sweep

REFERENCE_H = HVector((1, 4, 9, 13, 13, 13, 9, 6, 4))
FP = PrimeField(DEFAULT_PRIME)


def _report(n, detail):
    print(f"criterion {n}: PASS ({detail})")


def test_criterion_1_reference_bounds(capsys):
    # exact bound vectors through the CLI, and the computation itself < 1 ms
    assert main(["bounds", "--h", "1,4,9,13,13,13,9,6,4",
                 "--d", "6", "--c", "3"]) == 0
    out = capsys.readouterr().out
    assert "lower: 1,3,4,6,5,5,3" in out
    assert "upper: 1,4,9,13,13,12,3" in out

    best = min(
        _timed(lambda: bounds_report(REFERENCE_H, 6, 3)) for _ in range(5)
    )
    assert best < 1e-3
    with capsys.disabled():
        _report(1, f"exact vectors, {best * 1e6:.0f} us")


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def _grid():
    for t in range(1, 4):
        for block in range(1, 4):
            for e in range(3, 6):
                yield Remark5Params(t=t, block=block, e=e)


def test_criterion_2_family_closed_form(capsys):
    t0 = time.perf_counter()
    count = 0
    for params in _grid():
        pres = remark5_family(params, FP)
        assert hvector(pres) == expected_remark5_h(params)
        count += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    with capsys.disabled():
        _report(2, f"{count} instances in {elapsed:.2f} s")


def test_criterion_3_lower_bound_sharpness(capsys):
    checked = 0
    for params in _grid():
        pres = remark5_family(params, FP)
        h = hvector(pres)
        for c in range(1, params.t + 1):
            rng = SeededRng(derive_seed(0, params.t, params.block, params.e, c))
            qh = hvector(generic_quotient(pres, params.e, c, rng))
            expected = expected_remark5_quotient_h(params, c)
            assert qh == expected
            report = bounds_report(h, params.e, c)
            assert report.lower_display == tuple(qh)
            if not report.degenerate_case:
                # interior exact values are integers, no rounding involved
                for q in report.lower_exact[:-1]:
                    assert q.denominator == 1
            checked += 1
    with capsys.disabled():
        _report(3, f"{checked} quotients meet the ceiled lower bound exactly")


def test_criterion_4_upper_bound_sharpness(capsys):
    t0 = time.perf_counter()
    for k in range(5):
        rng = SeededRng(derive_seed(1, "septics", k))
        ambient, quotient = remark5_upper_sharp(FP, rng)
        ah = hvector(ambient)
        qh = hvector(quotient)
        assert ah == (1, 3, 6, 10, 15, 12, 6, 2)
        assert ah == compressed_hvector(3, 7, 2)
        assert qh == (1, 3, 6, 10, 12, 6, 2)
        assert tuple(qh) == bounds_report(ah, 6, 2).upper_display
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    with capsys.disabled():
        _report(4, f"5 seeds in {elapsed:.2f} s")


def test_criterion_5_separation(capsys):
    t0 = time.perf_counter()
    rng = SeededRng(3)
    family, power = remark6_pair(2, 2, 4, FP, rng)
    assert hvector(family) == (1, 6, 6, 6, 2)
    assert hvector(power) == (1, 6, 6, 6, 2)
    gh = hvector(generic_quotient(family, 4, 1, rng.spawn("g")))
    dh = hvector(remark6_designated_quotient(power))
    assert gh == (1, 4, 4, 4, 1)
    assert dh == (1, 5, 5, 5, 1)
    assert all(gh[i] < dh[i] for i in range(1, 4))
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    with capsys.disabled():
        _report(5, f"strict dominance on degrees 1..3 in {elapsed:.2f} s")


def test_criterion_6_randomized_audit(capsys):
    config = SweepConfig(
        r_range=(1, 4), e_range=(1, 6), t_range=(1, 3), trials=5, seed=2026
    )
    t0 = time.perf_counter()
    records, summary = run_sweep(config)
    elapsed = time.perf_counter() - t0
    assert summary.violations == 0
    assert all(rec.within for rec in records)
    assert summary.records == len(records) > 100
    assert summary.min_lower_gap >= 0
    assert summary.min_upper_gap >= 0
    assert elapsed < 120.0
    with capsys.disabled():
        _report(6, f"{summary.records} records, 0 violations, {elapsed:.1f} s")


def test_criterion_7_gorenstein_symmetry(capsys):
    rng = SeededRng(7)
    count = 0
    for _ in range(50):
        r = rng.randrange(1, 5)
        e = rng.randrange(1, 7)
        pres = generic_forms_presentation(r, e, 1, FP, rng.spawn(count))
        h = hvector(pres)
        assert all(h[i] == h[e - i] for i in range(e + 1))
        count += 1
    with capsys.disabled():
        _report(7, f"{count} single-generator h-vectors palindromic")


def test_criterion_8_sweep_determinism(tmp_path, capsys):
    args = ["sweep", "--r", "1:3", "--e", "1:4", "--t", "1:2",
            "--trials", "3", "--seed", "5"]
    a = tmp_path / "one.csv"
    b = tmp_path / "two.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    with capsys.disabled():
        _report(8, f"{len(a.read_bytes())} bytes reproduced exactly")
