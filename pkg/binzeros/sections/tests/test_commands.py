from io import StringIO
import json

from django.core.management import call_command
from django.core.management.base import CommandError
import pytest

from sections.management.base import (EXIT_CHECK_FAILED, EXIT_NUMERICAL,
                                      EXIT_USAGE)


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


def exit_code(*args, **options):
    with pytest.raises(CommandError) as info:
        run(*args, **options)
    return info.value.returncode


def test_zeros_csv():
    lines = run('zeros', r=1, n=9, format='csv').splitlines()
    assert lines[0] == 're,im,residual'
    assert len(lines) == 2
    assert lines[1].startswith('-0.1111111111')


def test_zeros_json_reports_multiplicity():
    data = json.loads(run('zeros', r=3, n=3))
    assert data['warnings'] == ['-1 is a zero of multiplicity 3']
    assert len(data['zeros']) == 3


def test_zeros_to_file(tmp_path):
    target = tmp_path / 'zeros.json'
    assert run('zeros', r=4, n=12, out=str(target)) == ''
    data = json.loads(target.read_text())
    assert len(data['zeros']) == 4


def test_zeros_rejects_r_above_n():
    assert exit_code('zeros', r=5, n=4) == EXIT_USAGE


def test_zeros_rejects_low_precision():
    assert exit_code('zeros', r=3, n=8, precision_bits=32) == EXIT_USAGE


def test_zeros_iteration_cap(settings):
    settings.BINZEROS_MAX_ITERATIONS = 1
    assert exit_code('zeros', r=10, n=30) == EXIT_NUMERICAL


def test_verify_outside_hypothesis():
    assert exit_code('verify', r=5, n=6) == EXIT_USAGE


def test_verify_passes_and_is_deterministic():
    first = run('verify', r=10, n=30)
    second = run('verify', r=10, n=30)
    assert first == second
    data = json.loads(first)
    assert data['passed'] is True
    assert len(data['margins']) == 10


def test_verify_sweep_csv():
    lines = run('verify', n_max=6, format='csv').splitlines()
    assert lines[0] == 'r,n,region_passed,vieta_passed,conjugate_closed'
    assert len(lines) == 1 + sum(n - 2 for n in range(3, 7))


def test_curve():
    data = json.loads(run('curve', alpha='1/3', points=32))
    assert data['alpha'] == '1/3'
    assert data['branch'] == 'inner'
    assert len(data['points']) == 32
    assert data['points'][0]['re'].startswith('0.5')


def test_curve_rejects_bad_alpha():
    assert exit_code('curve', alpha='1.5') == EXIT_USAGE


def test_sweep_csv():
    lines = run('sweep', alpha='1/3', ns='30,90', points=64,
                format='csv').splitlines()
    assert lines[0] == 'n,r,sup_distance,rate_statistic,singular_gap,coverage'
    assert [line.split(',')[:2] for line in lines[1:]] == [['30', '10'],
                                                           ['90', '30']]


def test_sweep_above_cap():
    assert exit_code('sweep', alpha='1/3', ns='30,400') == EXIT_USAGE


def test_figure_needs_out():
    assert exit_code('figure', '1', points=32) == EXIT_USAGE


def test_figure_layers(tmp_path):
    run('figure', '1', points=32, out=str(tmp_path))
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ['circle1.csv', 'circle2.csv', 'curve.csv', 'zeros.csv']
    zeros = run('zeros', r=10, n=30, format='csv')
    assert (tmp_path / 'zeros.csv').read_text() == zeros
    assert len((tmp_path / 'curve.csv').read_text().splitlines()) == 33


@pytest.mark.slow
def test_figure_with_quantised_points(tmp_path):
    run('figure', '3', points=64, out=str(tmp_path))
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ['curve.csv', 'points.csv', 'zeros.csv']
    points = (tmp_path / 'points.csv').read_text().splitlines()
    assert points[0] == 'k,re,im'
    assert len(points) == 40


def test_check_failure_exit_code(monkeypatch):
    from sections.management.commands import zeros
    from sections.solver import ResidualCheck

    monkeypatch.setattr(zeros, 'verify_residuals',
                        lambda zs: ResidualCheck(False, 1))
    assert exit_code('zeros', r=2, n=5) == EXIT_CHECK_FAILED


def test_szego_first_section():
    data = json.loads(run('szego', r=1, n=10, points=32))
    assert (data['n'], data['r']) == (10, 1)
    assert data['passed'] is True
    assert data['max_modulus'].startswith('0.9')


def test_halfline_single_n():
    data = json.loads(run('halfline', ns='4'))
    (record,) = data['records']
    assert (record['n'], record['r']) == (4, 1)
    assert record['max_deviation'].startswith('0.25')
    assert data['passed'] is True


def test_halfline_rejects_small_n():
    assert exit_code('halfline', ns='3,10') == EXIT_USAGE


def test_zeros_json_carries_exact_polynomial():
    data = json.loads(run('zeros', r=3, n=5))
    assert data['polynomial'] == {'r': 3, 'n': 5, 'family': 'section',
                                  'coeffs': ['1', '5', '10', '10']}


def test_verify_reports_remainder_bounds():
    data = json.loads(run('verify', r=10, n=30))
    remainder = data['remainder']
    assert (remainder['r'], remainder['n']) == (10, 30)
    assert remainder['samples'] == 202
    assert remainder['passed'] is True


def test_sweep_singular_record():
    data = json.loads(run('sweep', alpha='1/3', ns='30', points=64,
                          singular=True))
    singular = data['singular']
    assert (singular['r'], singular['n']) == (10, 30)
    assert float(singular['predicted']['im']) > 0
    assert float(singular['nearest']['im']) > 0
