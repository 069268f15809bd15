from fractions import Fraction
from pathlib import Path

import mpmath as mp

from ... import conf
from ...bigcomplex import to_mpf
from ...exceptions import DomainError
from ...exactpoly import SectionParams, build_section
from ...export import (CURVE_HEADER, ZERO_HEADER, curve_rows, render_csv,
                       write_atomic, zero_rows)
from ...geometry import Alpha, Branch, curve_points, sample_curve
from ...serializers import (CurveSampleSerializer, ZeroSetSerializer,
                            decimal_string, output_context)
from ...solver import find_zeros, verify_residuals
from ..base import SectionsCommand

# which -> (r, n, extra layers)
FIGURES = {
    1: (10, 30, ('circle1', 'circle2')),
    2: (30, 90, ('circle1', 'circle2')),
    3: (40, 80, ('points',)),
}
CIRCLE_HEADER = ('theta', 're', 'im')
POINTS_HEADER = ('k', 're', 'im')


def circle_rows(center, radius, m, bits, digits):
    rows = []
    with mp.workprec(bits):
        center, radius = to_mpf(center), to_mpf(radius)
        for j in range(m):
            theta = 2 * mp.pi * j / m
            z = center + radius * mp.expj(theta)
            rows.append((decimal_string(theta, digits),
                         decimal_string(z.real, digits),
                         decimal_string(z.imag, digits)))
    return rows


class Command(SectionsCommand):
    help = ('Layered CSV data for the zero/curve pictures: '
            '1 = (10, 30), 2 = (30, 90), 3 = (40, 80).')
    command_name = 'figure'

    def add_arguments(self, parser):
        parser.add_argument('which', type=int, choices=(1, 2, 3))
        parser.add_argument('--points', type=int,
                            help='curve sample size (default 512)')
        super().add_arguments(parser)

    def run(self, config):
        if not config.out:
            raise DomainError('figure needs --out DIR', field='out')
        r, n, extras = FIGURES[config.which]
        params = SectionParams(r, n)
        out = Path(config.out)
        m = config.points or conf.curve_points()

        zs = find_zeros(build_section(params), config.precision_bits)
        bits = zs.precision_bits
        context = output_context(bits)
        digits = context['digits']
        zero_data = ZeroSetSerializer(zs, context=context).data
        layers = {'zeros': render_csv(ZERO_HEADER, zero_rows(zero_data))}

        alpha = Alpha(params.beta, bits)
        sample = sample_curve(alpha, Branch.INNER, m, bits)
        curve_data = CurveSampleSerializer(sample, context=context).data
        layers['curve'] = render_csv(CURVE_HEADER, curve_rows(curve_data))

        if 'circle1' in extras:
            gamma = params.gamma
            layers['circle1'] = render_csv(CIRCLE_HEADER, circle_rows(
                0, Fraction(r, n + 1 - r), m, bits, digits))
            layers['circle2'] = render_csv(CIRCLE_HEADER, circle_rows(
                gamma * gamma / (1 - gamma * gamma),
                gamma / (1 - gamma * gamma), m, bits, digits))
        if 'points' in extras:
            rows = []
            for k, z in enumerate(curve_points(alpha, n), start=1):
                parts = z.to_strings(digits)
                rows.append((k, parts['re'], parts['im']))
            layers['points'] = render_csv(POINTS_HEADER, rows)

        for name, content in layers.items():
            write_atomic(out / f'{name}.csv', content)
        self.stdout.write(
            f'figure {config.which}: {", ".join(layers)} -> {out}'
        )
        return verify_residuals(zs).passed and all(
            res < sample.tolerance for res in sample.residuals
        )
