import logging

from ...export import SWEEP_HEADER, record_rows
from ...serializers import (ConvergenceRecordSerializer,
                            SingularRecordSerializer, output_context)
from ...verify import (convergence_sweep, erfc_zero, singular_check,
                       sweep_inversions)
from ..base import SectionsCommand

logger = logging.getLogger(__name__)

# one non-decreasing step is tolerated at small n
ALLOWED_INVERSIONS = 1
CHI_PRECISION = 64


class Command(SectionsCommand):
    help = 'Distance of the zeros to C_alpha along a sequence of n.'
    command_name = 'sweep'

    def add_arguments(self, parser):
        parser.add_argument('--alpha', required=True)
        parser.add_argument('--ns', required=True,
                            help='comma-separated list, e.g. 30,90,150')
        parser.add_argument('--points', type=int,
                            help='curve sample size (default 512)')
        parser.add_argument('--allow-large-n', action='store_true',
                            dest='allow_large_n')
        parser.add_argument('--singular', action='store_true',
                            help='add the erfc prediction for the zero '
                                 'nearest z_beta at the largest n')
        super().add_arguments(parser)

    def run(self, config):
        records = convergence_sweep(
            config.alpha,
            config.ns,
            precision_bits=config.precision_bits,
            points=config.points,
            allow_large_n=config.allow_large_n,
        )
        inversions = sweep_inversions(records)
        passed = len(inversions) <= ALLOWED_INVERSIONS
        rows = ConvergenceRecordSerializer(
            records, many=True, context=output_context(64)
        ).data
        data = {
            'alpha': str(config.alpha),
            'records': rows,
            'inversions': inversions,
            'passed': passed,
        }
        if config.singular:
            largest = max(records, key=lambda rec: rec.params.n).params
            record = singular_check(largest, erfc_zero(CHI_PRECISION),
                                    config.precision_bits)
            logger.info('singular zero deviation at %s: %s', largest,
                        record.deviation)
            data['singular'] = SingularRecordSerializer(
                record, context=output_context(CHI_PRECISION)
            ).data
        self.emit(config, data, SWEEP_HEADER, record_rows(rows, SWEEP_HEADER))
        return passed
