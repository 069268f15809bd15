from ... import conf
from ...export import CURVE_HEADER, curve_rows
from ...geometry import sample_curve
from ...serializers import CurveSampleSerializer, output_context
from ..base import SectionsCommand


class Command(SectionsCommand):
    help = 'Sample the limit curve C_alpha (inner) or C\'_alpha (outer).'
    command_name = 'curve'

    def add_arguments(self, parser):
        parser.add_argument('--alpha', required=True,
                            help="ratio such as 1/3 or 0.3333")
        parser.add_argument('--branch', choices=('inner', 'outer'),
                            default='inner')
        parser.add_argument('--points', type=int,
                            help='sample size (default 512)')
        super().add_arguments(parser)

    def run(self, config):
        sample = sample_curve(
            config.alpha,
            config.branch,
            config.points or conf.curve_points(),
            config.precision_bits,
        )
        data = CurveSampleSerializer(
            sample, context=output_context(sample.precision_bits)
        ).data
        self.emit(config, data, CURVE_HEADER, curve_rows(data))
        return all(res < sample.tolerance for res in sample.residuals)
