from ...export import HALFLINE_HEADER, record_rows
from ...serializers import HalfLineRecordSerializer, output_context
from ...verify import halfline_check
from ..base import SectionsCommand


class Command(SectionsCommand):
    help = 'Zeros of B_{n-3,n} against the line Re z = -1/2.'
    command_name = 'halfline'

    def add_arguments(self, parser):
        parser.add_argument('--ns', required=True,
                            help='comma-separated list, e.g. 50,100,200')
        super().add_arguments(parser)

    def run(self, config):
        records = halfline_check(sorted(config.ns), config.precision_bits)
        deviations = [record.max_deviation for record in records]
        decreasing = all(b < a for a, b in zip(deviations, deviations[1:]))
        passed = decreasing and all(r.strictly_right for r in records)
        rows = HalfLineRecordSerializer(
            records, many=True, context=output_context(64)
        ).data
        data = {'records': rows, 'passed': passed}
        self.emit(config, data, HALFLINE_HEADER,
                  record_rows(rows, HALFLINE_HEADER))
        return passed
