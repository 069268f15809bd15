from ...exactpoly import SectionParams, build_section
from ...export import ZERO_HEADER, zero_rows
from ...serializers import ZeroSetSerializer, output_context
from ...solver import find_zeros, verify_residuals
from ..base import SectionsCommand


class Command(SectionsCommand):
    help = 'All zeros of B_{r,n} with residual certificates.'
    command_name = 'zeros'

    def add_arguments(self, parser):
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument('--n', type=int, required=True)
        super().add_arguments(parser)

    def run(self, config):
        params = SectionParams(config.r, config.n)
        zs = find_zeros(build_section(params), config.precision_bits)
        check = verify_residuals(zs)
        data = ZeroSetSerializer(
            zs, context=output_context(zs.precision_bits)
        ).data
        self.emit(config, data, ZERO_HEADER, zero_rows(data))
        return check.passed
