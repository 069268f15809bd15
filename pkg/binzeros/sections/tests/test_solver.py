import mpmath as mp
import pytest

from sections.exactpoly import ExactPolynomial, SectionParams, build_section
from sections.exceptions import ConvergenceError, DomainError
from sections.bigcomplex import BigComplex
from sections.solver import (
    AberthSolver,
    _cluster_warnings,
    find_zeros,
    is_conjugate_closed,
    start_circles,
    verify_residuals,
    vieta_check,
)


@pytest.mark.parametrize('n', range(1, 51))
def test_first_section_has_single_zero(n):
    zs = find_zeros(build_section(SectionParams(1, n)))
    (zero,) = zs.zeros
    with mp.workprec(zs.precision_bits):
        assert zero.re == mp.mpf(-1) / n
        assert zero.im == 0


@pytest.mark.parametrize('n', [3, 4, 7, 12, 20, 30])
def test_penultimate_section_on_vertical_line(n):
    zs = find_zeros(build_section(SectionParams(n - 1, n)))
    assert len(zs.zeros) == n - 1
    with mp.workprec(zs.precision_bits):
        for z in zs.zeros:
            assert abs(z.re + mp.mpf(1) / 2) < zs.tolerance


def test_full_expansion_reports_multiplicity():
    zs = find_zeros(build_section(SectionParams(3, 3)))
    assert len(zs.zeros) == 3
    assert all(z.re == -1 and z.im == 0 for z in zs.zeros)
    assert zs.warnings == ('-1 is a zero of multiplicity 3',)


def test_section_10_30(zeros_10_30):
    zs = zeros_10_30
    assert len(zs.zeros) == 10
    assert zs.precision_bits == 128
    assert is_conjugate_closed(zs)
    assert vieta_check(zs).passed
    assert verify_residuals(zs).passed
    assert not zs.warnings


def test_zeros_sorted_by_real_then_imaginary(zeros_10_30):
    keys = [z.sort_key() for z in zeros_10_30.zeros]
    assert keys == sorted(keys)


def test_even_polynomial():
    zs = find_zeros(ExactPolynomial((-2, 0, 1)), 64)
    with mp.workprec(64):
        root = mp.sqrt(2)
        assert [z.im for z in zs.zeros] == [0, 0]
        assert abs(zs.zeros[0].re + root) < mp.ldexp(1, -50)
        assert abs(zs.zeros[1].re - root) < mp.ldexp(1, -50)


def test_iteration_cap_raises_with_best_iterate():
    with pytest.raises(ConvergenceError) as info:
        find_zeros(build_section(SectionParams(10, 30)), max_iterations=1)
    assert len(info.value.best_iterate) == 10
    assert len(info.value.residuals) == 10


def test_solver_is_single_use():
    solver = AberthSolver(build_section(SectionParams(3, 7)), 64)
    solver.solve()
    with pytest.raises(RuntimeError):
        solver.solve()


def test_precision_below_double_rejected():
    with pytest.raises(DomainError) as info:
        find_zeros(build_section(SectionParams(3, 7)), 32)
    assert info.value.field == 'precision_bits'


def test_constant_polynomial_rejected():
    with pytest.raises(DomainError):
        find_zeros(ExactPolynomial((5,)))


def test_iteration_cap_from_settings(settings):
    settings.BINZEROS_MAX_ITERATIONS = 1
    with pytest.raises(ConvergenceError):
        find_zeros(build_section(SectionParams(6, 20)))


def test_default_precision_grows_with_n(settings):
    settings.BINZEROS_PRECISION = None
    zs = find_zeros(build_section(SectionParams(5, 100)))
    assert zs.precision_bits == 264


def test_section_start_circles_follow_coefficient_ratios():
    p = SectionParams(7, 20)
    circles = start_circles(build_section(p).coeffs)
    assert [(first, count) for first, _, count in circles] == \
        [(k, 1) for k in range(7)]
    with mp.workprec(53):
        for k, radius, _ in circles:
            assert abs(radius - mp.mpf(k + 1) / (20 - k)) < mp.ldexp(1, -40)


def test_geometric_coefficients_share_one_radius():
    circles = start_circles((1, 2, 4))
    assert sum(count for _, _, count in circles) == 2
    for _, radius, _ in circles:
        assert abs(radius - mp.mpf(1) / 2) < mp.ldexp(1, -40)


def test_start_circles_cover_zeros_at_origin():
    circles = start_circles((0, 0, 1, 1))
    assert sum(count for _, _, count in circles) == 3
    assert circles[0][0] == 0 and circles[0][2] == 2
    assert circles[0][1] < circles[1][1]


def test_cluster_warning_for_close_zeros():
    zeros = [BigComplex.from_value(v, 64) for v in
             (mp.mpf(1), 1 + mp.ldexp(1, -20), mp.mpf(2))]
    (message,) = _cluster_warnings(zeros, 64)
    assert message.startswith('zeros 0 and 1')


def test_no_cluster_warning_for_conjugate_pair():
    zeros = [BigComplex.from_value(mp.mpc(0, -1), 64),
             BigComplex.from_value(mp.mpc(0, 1), 64)]
    assert _cluster_warnings(zeros, 64) == []


def test_near_full_section_60():
    zs = find_zeros(build_section(SectionParams(57, 60)))
    assert len(zs.zeros) == 57
    assert verify_residuals(zs).passed
    assert is_conjugate_closed(zs)


@pytest.mark.slow
def test_near_full_section_200():
    zs = find_zeros(build_section(SectionParams(197, 200)))
    assert len(zs.zeros) == 197
    assert verify_residuals(zs).passed
    assert vieta_check(zs).passed
