from ...export import SZEGO_HEADER, record_rows
from ...serializers import SzegoRecordSerializer, output_context
from ...verify import SZEGO_ETA, szego_check
from ..base import SectionsCommand

MODULUS_SLACK = 1e-10


class Command(SectionsCommand):
    help = 'Rescaled zeros of B_{r,n} against the Szegő curve.'
    command_name = 'szego'

    def add_arguments(self, parser):
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--points', type=int,
                            help='curve sample size (default 512)')
        super().add_arguments(parser)

    def run(self, config):
        record = szego_check(config.r, config.n, config.precision_bits,
                             config.points)
        passed = (record.max_modulus <= 1 + MODULUS_SLACK
                  and record.min_modulus >= float(SZEGO_ETA))
        data = dict(SzegoRecordSerializer(
            record, context=output_context(64)
        ).data)
        data['passed'] = passed
        self.emit(config, data, SZEGO_HEADER, record_rows([data], SZEGO_HEADER))
        return passed
