"""Reference constructions: block families, power sums, compressed forms."""

import pytest

from apolarity_lab import (
    DependentGenerators,
    GENERIC,
    HVector,
    InvalidParameter,
    PowerSumSpec,
    Remark5Params,
    SeededRng,
    TypeTooLarge,
    bounds_report,
    compressed_hvector,
    expected_remark5_h,
    expected_remark5_quotient_h,
    generic_forms_presentation,
    generic_quotient,
    hvector,
    power_sum_presentation,
    remark5_family,
    remark5_upper_sharp,
    remark6_designated_quotient,
    remark6_pair,
)


def test_params_validation():
    with pytest.raises(InvalidParameter):
        Remark5Params(t=0, block=1, e=3)
    with pytest.raises(InvalidParameter):
        Remark5Params(t=1, block=0, e=3)
    with pytest.raises(InvalidParameter):
        Remark5Params(t=1, block=1, e=2)
    assert Remark5Params(t=2, block=3, e=4).num_vars == 9


def test_smallest_family_instance(fp):
    pres = remark5_family(Remark5Params(t=1, block=1, e=3), fp)
    assert pres.num_vars == 2
    assert len(pres.generators) == 1
    # single generator y_2 y_1^2
    assert pres.generators[0].terms == {(2, 1): 1}
    assert hvector(pres) == (1, 2, 2, 1)


def test_family_generators_t2_b2_e4(fp):
    pres = remark5_family(Remark5Params(t=2, block=2, e=4), fp)
    assert pres.num_vars == 6
    assert pres.generators[0].terms == {(3, 0, 1, 0, 0, 0): 1,
                                        (0, 3, 0, 1, 0, 0): 1}
    assert pres.generators[1].terms == {(3, 0, 0, 0, 1, 0): 1,
                                        (0, 3, 0, 0, 0, 1): 1}
    assert hvector(pres) == (1, 6, 6, 6, 2)


def test_expected_h_formulas():
    params = Remark5Params(t=2, block=2, e=4)
    assert expected_remark5_h(params) == (1, 6, 6, 6, 2)
    assert expected_remark5_quotient_h(params, 1) == (1, 4, 4, 4, 1)
    small = Remark5Params(t=1, block=1, e=3)
    assert expected_remark5_h(small) == (1, 2, 2, 1)
    with pytest.raises(TypeTooLarge):
        expected_remark5_quotient_h(params, 3)


@pytest.mark.parametrize("t,block,e", [
    (1, 1, 3), (1, 2, 4), (2, 1, 3), (2, 2, 4), (3, 2, 3), (2, 3, 5),
])
def test_family_matches_closed_form(fp, t, block, e):
    params = Remark5Params(t=t, block=block, e=e)
    assert hvector(remark5_family(params, fp)) == expected_remark5_h(params)


def test_quotient_scaling_identity(fp):
    # the exact lower bound on the family h-vector is integral at interior
    # indices and lands exactly on (c+1)*block there
    params = Remark5Params(t=2, block=2, e=4)
    h = hvector(remark5_family(params, fp))
    for c in (1, 2):
        report = bounds_report(h, 4, c)
        assert not report.degenerate_case or h[4] == 1
        for i, q in enumerate(report.lower_exact[:-1], start=1):
            assert q.denominator == 1
            assert q == (c + 1) * params.block
        assert report.lower_display == expected_remark5_quotient_h(params, c)


def test_power_sum_spec_validation():
    with pytest.raises(InvalidParameter):
        PowerSumSpec(2, 3, ())
    with pytest.raises(InvalidParameter):
        PowerSumSpec(2, 3, ((),))
    with pytest.raises(InvalidParameter):
        PowerSumSpec(2, 3, (((1, 2, 3),),))  # wrong coefficient count
    spec = PowerSumSpec.all_generic(3, 4, [2, 1])
    assert spec.groups == ((GENERIC, GENERIC), (GENERIC,))


def test_power_sum_single_explicit(fp):
    spec = PowerSumSpec(3, 4, (((1, 0, 0),),))
    pres = power_sum_presentation(spec, fp, SeededRng(0))
    assert pres.generators[0].terms == {(4, 0, 0): 1}
    assert hvector(pres) == (1, 1, 1, 1, 1)


def test_power_sum_generic_h1(fp):
    for s, expected in ((2, 2), (3, 3), (5, 4)):
        spec = PowerSumSpec.all_generic(4, 3, [s])
        pres = power_sum_presentation(spec, fp, SeededRng(s))
        assert hvector(pres)[1] == min(s, 4) == expected


def test_power_sum_dependent_explicit_raises(fp):
    # identical explicit generators cannot be redrawn
    spec = PowerSumSpec(2, 3, (((1, 2),), ((1, 2),)))
    with pytest.raises(DependentGenerators):
        power_sum_presentation(spec, fp, SeededRng(1))


def test_compressed_closed_form():
    assert compressed_hvector(3, 7, 2) == (1, 3, 6, 10, 15, 12, 6, 2)
    assert compressed_hvector(1, 4, 1) == (1, 1, 1, 1, 1)
    assert compressed_hvector(2, 3, 1) == (1, 2, 2, 1)
    with pytest.raises(InvalidParameter):
        compressed_hvector(0, 3, 1)


def test_generic_forms_presentation(fp):
    pres = generic_forms_presentation(3, 7, 2, fp, SeededRng(4))
    assert pres.num_vars == 3
    assert len(pres.generators) == 2
    assert hvector(pres) == compressed_hvector(3, 7, 2)
    with pytest.raises(TypeTooLarge):
        generic_forms_presentation(1, 3, 2, fp, SeededRng(0))


def test_upper_sharp_pair(fp):
    for seed in range(3):
        ambient, quotient = remark5_upper_sharp(fp, SeededRng(seed))
        ah = hvector(ambient)
        qh = hvector(quotient)
        assert ah == (1, 3, 6, 10, 15, 12, 6, 2)
        assert qh == (1, 3, 6, 10, 12, 6, 2)
        report = bounds_report(ah, 6, 2)
        assert tuple(qh) == report.upper_display


def test_upper_sharp_quotient_vs_generic(fp):
    # a generic type-2 quotient at d=6 gives the same h-vector as the
    # designated derivative pair
    ambient, _ = remark5_upper_sharp(fp, SeededRng(12))
    q = generic_quotient(ambient, 6, 2, SeededRng(13))
    assert hvector(q) == (1, 3, 6, 10, 12, 6, 2)


def test_remark6_pair_properties(fp):
    family, power = remark6_pair(2, 2, 4, fp, SeededRng(5))
    assert hvector(family) == hvector(power) == (1, 6, 6, 6, 2)
    designated = remark6_designated_quotient(power)
    assert hvector(designated) == (1, 5, 5, 5, 1)
    generic = generic_quotient(family, 4, 1, SeededRng(6))
    gh = hvector(generic)
    assert gh == (1, 4, 4, 4, 1)
    dh = hvector(designated)
    assert all(gh[i] < dh[i] for i in range(1, 4))


def test_remark6_requires_separation_range(fp):
    with pytest.raises(InvalidParameter):
        remark6_pair(1, 2, 4, fp, SeededRng(0))
    with pytest.raises(InvalidParameter):
        remark6_pair(2, 1, 4, fp, SeededRng(0))
