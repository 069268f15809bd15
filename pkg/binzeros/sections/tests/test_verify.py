import dataclasses
from fractions import Fraction

from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st
import mpmath as mp
import numpy as np
import pytest

from sections.bigcomplex import BigComplex, to_mpf
from sections.exactpoly import SectionParams, build_section
from sections.exceptions import DomainError, HypothesisError
from sections.geometry import Alpha
from sections.solver import find_zeros, is_conjugate_closed, vieta_check
from sections.verify import (
    check_minimum_modulus,
    check_nested_circles,
    check_region,
    check_region_sweep,
    check_reliability_annulus,
    check_remainder_bounds,
    convergence_sweep,
    erfc_zero,
    halfline_check,
    halfline_control,
    random_admissible_sequence,
    region_margins,
    remainder_coefficients,
    remainder_lower_ratio,
    remainder_upper_bound,
    remainder_zero_check,
    require_region_hypothesis,
    singular_check,
    singular_prediction,
    sweep_inversions,
    sweep_precision,
    szego_check,
    tail_sum,
    validate_admissible,
)

from .fixtures import (
    ALPHAS,
    CHI,
    CHI_TOLERANCE,
    SZEGO_ETA,
    SZEGO_MODULUS_SLACK,
)

THIRD = Alpha(Fraction(1, 3))


@pytest.fixture(scope='module')
def chi():
    return erfc_zero(64)


# --- Zero region ---
def test_region_of_section_10_30(zeros_10_30):
    report = check_region(zeros_10_30)
    assert report.passed
    assert len(report.margins) == 10


def test_region_margins_of_first_section(zeros_1_5):
    report = check_region(zeros_1_5)
    (margins,) = report.margins
    # -1/5 sits on both the disk and the circle boundary
    assert abs(margins.outer) < report.tolerance
    assert abs(margins.circle) < report.tolerance
    assert abs(margins.halfplane - mp.mpf('0.3')) < mp.mpf('1e-15')
    assert margins.curve > 0
    assert report.passed


def test_region_detects_zero_outside(zeros_1_5):
    report = check_region(zeros_1_5)
    outside = region_margins(SectionParams(1, 5),
                             BigComplex.from_value(mp.mpf('-0.6'), 128))
    broken = dataclasses.replace(report, margins=(outside,))
    assert outside.outer < 0
    assert outside.halfplane < 0
    assert not broken.passed


@pytest.mark.parametrize('r, n', [(4, 5), (5, 5), (29, 30)])
def test_region_hypothesis(r, n):
    with pytest.raises(HypothesisError) as info:
        require_region_hypothesis(SectionParams(r, n))
    assert info.value.field == 'r'


def test_region_check_rejects_penultimate_section():
    zs = find_zeros(build_section(SectionParams(6, 7)))
    with pytest.raises(HypothesisError):
        check_region(zs)


def test_region_sweep_small():
    result = check_region_sweep(8)
    assert len(result.cases) == sum(n - 2 for n in range(3, 9))
    assert result.passed
    assert result.failures() == []


@pytest.mark.parametrize('r', [1, 19, 38])
def test_region_holds_at_sweep_precision(r):
    zs = find_zeros(build_section(SectionParams(r, 40)), sweep_precision(40))
    assert zs.precision_bits == 104
    report = check_region(zs)
    assert report.passed
    assert vieta_check(zs).passed
    assert is_conjugate_closed(zs)


@pytest.mark.slow
def test_region_sweep_to_40():
    assert check_region_sweep(40).passed


def test_region_sweep_needs_three():
    with pytest.raises(DomainError):
        check_region_sweep(2)


def test_reliability_annulus(zeros_10_30):
    assert check_reliability_annulus(zeros_10_30)


# --- Minimum modulus ---
@pytest.mark.parametrize('b', [
    [1, 0],
    [2, 1, Fraction(1, 2), Fraction(1, 4)],
    [5, 3, 1],
])
def test_minimum_modulus_examples(b):
    result = check_minimum_modulus(b, trials=2000)
    assert result.passed
    assert result.minimum >= result.bound * (1 - mp.mpf(2) ** -60)


def test_minimum_modulus_attained_at_minus_one():
    result = check_minimum_modulus([2, 1, Fraction(1, 2), Fraction(1, 4)],
                                   trials=2000)
    assert abs(result.minimum - mp.mpf('1.25')) < mp.mpf('1e-30')


def test_minimum_modulus_at_default_boundary_density():
    result = check_minimum_modulus([2, 1, Fraction(1, 2), Fraction(1, 4)])
    assert result.passed
    assert abs(result.minimum - mp.mpf('1.25')) < mp.mpf('1e-30')
    assert check_minimum_modulus(
        remainder_coefficients(SectionParams(10, 30))).passed


def test_minimum_modulus_of_rescaled_remainder():
    assert check_minimum_modulus(remainder_coefficients(
        SectionParams(5, 15)), trials=2000).passed


def test_minimum_modulus_random_sequences():
    rng = np.random.default_rng(7)
    for _ in range(100):
        length = int(rng.integers(2, 12))
        b = random_admissible_sequence(rng, length)
        assert check_minimum_modulus(b, trials=512).passed


@st.composite
def admissible_sequences(draw):
    b0 = draw(st.integers(min_value=2, max_value=60))
    b1 = draw(st.integers(min_value=0, max_value=b0 - 1))
    b = [Fraction(b0), Fraction(b1)]
    shrinks = draw(st.lists(st.fractions(min_value=0, max_value=1,
                                         max_denominator=8),
                            max_size=8))
    for shrink in shrinks:
        b.append(b[-1] * b[1] / b[0] * shrink)
    return b


@hypothesis_settings(max_examples=50, deadline=None)
@given(admissible_sequences())
def test_minimum_modulus_property(b):
    assert check_minimum_modulus(b, trials=256).passed


@pytest.mark.parametrize('b, field', [
    ([1], 'b[1]'),
    ([1, 1], 'b[1]'),
    ([1, 2], 'b[1]'),
    ([3, 1, -1], 'b[2]'),
    ([3, 1, 1], 'b[2]'),
    ([4, 2, 1, 1], 'b[3]'),
])
def test_inadmissible_sequences(b, field):
    with pytest.raises(DomainError) as info:
        validate_admissible(b)
    assert info.value.field == field


# --- Remainder bounds ---
def test_remainder_bounds_10_30():
    result = check_remainder_bounds(SectionParams(10, 30), 200, seed=1)
    assert result.passed
    assert result.samples == 202
    # z_beta is among the samples
    assert abs(result.max_upper_ratio - 1) < mp.mpf(2) ** -64


@pytest.mark.slow
def test_remainder_bounds_all_small_sections():
    for n in range(2, 41):
        for r in range(1, n):
            assert check_remainder_bounds(SectionParams(r, n), 50).passed


@pytest.mark.parametrize('r, n', [(1, 4), (3, 10), (10, 30), (20, 25)])
def test_upper_bound_is_scaled_tail(r, n):
    p = SectionParams(r, n)
    beta = p.beta
    # K_beta^n = beta^r (1-beta)^(n-r) is rational
    assert remainder_upper_bound(p) * beta ** r * (1 - beta) ** (n - r) \
        == tail_sum(p)


@pytest.mark.parametrize('r, n', [(1, 4), (3, 10), (10, 30), (20, 25)])
def test_lower_ratio_matches_rescaled_coefficients(r, n):
    p = SectionParams(r, n)
    b = remainder_coefficients(p)
    assert remainder_lower_ratio(p) == (b[0] - b[1]) / (b[0] + b[1])
    assert remainder_lower_ratio(p) >= Fraction(1, r + 1)


def test_lower_ratio_single_coefficient():
    assert remainder_lower_ratio(SectionParams(4, 5)) == 1


def test_tail_sum_values():
    assert tail_sum(SectionParams(1, 2)) == Fraction(1, 4)
    assert tail_sum(SectionParams(1, 3)) == Fraction(7, 27)


def test_tail_sum_at_half_increases_to_one_half():
    tails = [tail_sum(SectionParams(n // 2, n)) for n in range(2, 42, 2)]
    assert all(a < b for a, b in zip(tails, tails[1:]))
    assert all(t < Fraction(1, 2) for t in tails)


@pytest.mark.parametrize('n', [50, 100, 200])
def test_tail_sum_at_half_below_one_half(n):
    assert tail_sum(SectionParams(n // 2, n)) < Fraction(1, 2)


def test_tail_sum_at_half_large_n_trend():
    tails = [tail_sum(SectionParams(n // 2, n)) for n in (50, 100, 200)]
    assert tails[0] < tails[1] < tails[2]
    assert Fraction(1, 2) - tails[2] < Fraction(1, 10)


def test_remainder_bounds_need_r_below_n():
    with pytest.raises(HypothesisError):
        check_remainder_bounds(SectionParams(5, 5), 10)


@pytest.mark.parametrize('r, n', [(1, 5), (3, 10), (10, 30)])
def test_remainder_zeros_outside_disk(r, n):
    passed, smallest = remainder_zero_check(SectionParams(r, n))
    assert passed
    assert smallest >= mp.mpf(r + 2) / (n - r - 1) * (1 - mp.mpf('1e-9'))


# --- Convergence to the limit curve ---
@pytest.fixture(scope='module')
def third_sweep():
    return convergence_sweep(THIRD, [30, 90], points=128)


def test_convergence_sweep_decreases(third_sweep):
    records = third_sweep
    assert [rec.params for rec in records] == [SectionParams(10, 30),
                                               SectionParams(30, 90)]
    assert records[1].sup_distance < records[0].sup_distance
    assert sweep_inversions(records) == []


def test_zeros_fill_the_curve(third_sweep):
    coarse, fine = (rec.coverage for rec in third_sweep)
    assert 0 < fine < coarse


@pytest.mark.slow
def test_convergence_rate():
    records = convergence_sweep(THIRD, [30, 90, 150, 300])
    assert len(sweep_inversions(records)) <= 1
    assert records[-1].sup_distance < records[0].sup_distance / 3
    assert records[-1].coverage < records[0].coverage
    # the rate statistic stays within twice its running maximum
    rates = [rec.rate_statistic for rec in records]
    for i in range(1, len(rates)):
        assert rates[i] <= 2 * max(rates[:i])


def test_convergence_sweep_cap(settings):
    settings.BINZEROS_SWEEP_MAX_N = 50
    with pytest.raises(DomainError):
        convergence_sweep(THIRD, [30, 60])


def test_convergence_sweep_needs_region_hypothesis():
    with pytest.raises(HypothesisError):
        convergence_sweep(Alpha(Fraction(1, 100)), [10])


# --- Singular point ---
def test_erfc_zero(chi):
    assert abs(chi.re - mp.mpf(CHI[0])) < CHI_TOLERANCE
    assert abs(chi.im - mp.mpf(CHI[1])) < CHI_TOLERANCE
    with mp.workprec(64):
        assert abs(mp.erfc(chi.value)) < mp.ldexp(1, -30)


def test_singular_prediction_left_of_singular_point(chi):
    p = SectionParams(10, 30)
    predicted = singular_prediction(p, chi)
    assert predicted.re < mp.mpf(1) / 2
    assert predicted.im > 0


@pytest.mark.slow
def test_singular_zero_tracks_prediction(chi):
    coarse = singular_check(SectionParams(30, 90), chi)
    fine = singular_check(SectionParams(100, 300), chi)
    assert fine.deviation < coarse.deviation
    assert 0.5 < fine.singular_gap / fine.predicted_gap < 2


# --- Szegő and half-line regimes ---
@pytest.fixture(scope='module')
def szego_records():
    return [szego_check(10, 1000, points=128),
            szego_check(20, 2000, points=128)]


@pytest.mark.slow
def test_szego_regime_moduli(szego_records):
    for record in szego_records:
        assert record.max_modulus <= 1 + SZEGO_MODULUS_SLACK
        assert record.min_modulus >= to_mpf(SZEGO_ETA)


@pytest.mark.slow
def test_szego_distance_shrinks(szego_records):
    coarse, fine = szego_records
    assert fine.sup_distance < coarse.sup_distance


def test_szego_needs_r_below_n():
    with pytest.raises(HypothesisError):
        szego_check(5, 5)


def test_halfline_control():
    record = halfline_control(20)
    assert record.params == SectionParams(19, 20)
    assert record.max_deviation < mp.ldexp(1, -100)


@pytest.mark.slow
def test_halfline_deviation_shrinks():
    records = halfline_check([50, 100, 200])
    deviations = [rec.max_deviation for rec in records]
    assert all(a > b for a, b in zip(deviations, deviations[1:]))
    assert all(rec.strictly_right for rec in records)


def test_halfline_needs_room_for_offset():
    with pytest.raises(DomainError):
        halfline_check([3])


# --- Limiting circles ---
@pytest.mark.parametrize('exact', ALPHAS)
def test_nested_circles(exact):
    result = check_nested_circles(Alpha(exact), m=64)
    assert result.passed
