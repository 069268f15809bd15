from ... import conf
from ...exactpoly import SectionParams, build_section
from ...export import REGION_HEADER, region_rows
from ...serializers import (RegionCaseSerializer, RegionReportSerializer,
                            RegionSweepSerializer, RemainderBoundsSerializer,
                            output_context)
from ...solver import find_zeros, verify_residuals
from ...verify import (check_region, check_region_sweep,
                       check_remainder_bounds, require_region_hypothesis)
from ..base import SectionsCommand

CASE_HEADER = ('r', 'n', 'region_passed', 'vieta_passed',
               'conjugate_closed')

# random points on and inside |z| = z_beta for the remainder bounds
REMAINDER_SAMPLES = 200


class Command(SectionsCommand):
    help = ('Check the zero region and remainder bounds of B_{r,n}, or '
            'sweep every 1 <= r < n-1 up to --n-max.')
    command_name = 'verify'

    def add_arguments(self, parser):
        parser.add_argument('--r', type=int)
        parser.add_argument('--n', type=int)
        parser.add_argument('--n-max', type=int, dest='n_max',
                            help='exhaustive sweep over n <= n_max')
        super().add_arguments(parser)

    def run(self, config):
        if config.n_max is not None:
            return self.run_sweep(config)

        params = SectionParams(config.r, config.n)
        require_region_hypothesis(params)
        zs = find_zeros(build_section(params), config.precision_bits)
        report = check_region(zs)
        remainder = check_remainder_bounds(params, REMAINDER_SAMPLES,
                                           seed=conf.seed())
        data = dict(RegionReportSerializer(
            report, context=output_context(zs.precision_bits)
        ).data)
        data['remainder'] = RemainderBoundsSerializer(
            remainder, context=output_context(64)
        ).data
        self.emit(config, data, REGION_HEADER, region_rows(data))
        return report.passed and remainder.passed \
            and verify_residuals(zs).passed

    def run_sweep(self, config):
        result = check_region_sweep(config.n_max, config.precision_bits)
        data = RegionSweepSerializer(result).data
        cases = RegionCaseSerializer(result.cases, many=True).data
        rows = [tuple(case[key] for key in CASE_HEADER) for case in cases]
        self.emit(config, data, CASE_HEADER, rows)
        return result.passed
