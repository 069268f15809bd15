from dataclasses import dataclass
import logging

from django.core.management.base import BaseCommand, CommandError

from ..exceptions import (ConvergenceError, DomainError,
                          InsufficientDensityError)
from ..export import render_csv, render_json, write_atomic
from ..serializers import RunConfigSerializer

logger = logging.getLogger(__name__)

# Exit codes
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one command invocation."""
    command: str
    r: int = None
    n: int = None
    alpha: object = None
    ns: list = None
    precision_bits: int = None
    points: int = None
    format: str = 'json'
    out: str = None
    branch: str = 'inner'
    n_max: int = None
    allow_large_n: bool = False
    which: int = None
    singular: bool = False


class SectionsCommand(BaseCommand):
    """
    Shared plumbing: validate, compute, render, write.

    Subclasses set command_name and implement run(config), which returns
    True when every check of the run passed.
    """
    command_name = None
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--precision-bits', type=int,
                            dest='precision_bits',
                            help='working precision in bits')
        parser.add_argument('--format', choices=('json', 'csv'),
                            default='json')
        parser.add_argument('--out', help='output file (default: stdout)')

    def handle(self, *args, **options):
        config = self.get_config(options)
        try:
            passed = self.run(config)
        except DomainError as exc:
            logger.error('%s: %s', self.command_name, exc)
            raise CommandError(str(exc), returncode=EXIT_USAGE)
        except (ConvergenceError, InsufficientDensityError) as exc:
            logger.error('%s: numerical failure: %s', self.command_name, exc)
            raise CommandError(str(exc), returncode=EXIT_NUMERICAL)
        if not passed:
            logger.error('%s: check failed', self.command_name)
            raise CommandError(f'{self.command_name}: check failed',
                               returncode=EXIT_CHECK_FAILED)

    def get_config(self, options):
        data = {
            key: value for key, value in options.items()
            if key in RunConfigSerializer().fields and value is not None
        }
        data['command'] = self.command_name
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            message = '; '.join(
                f'{field}: {" ".join(str(e) for e in errors)}'
                for field, errors in serializer.errors.items()
            )
            logger.error('%s: %s', self.command_name, message)
            raise CommandError(message, returncode=EXIT_USAGE)
        return RunConfig(**serializer.validated_data)

    def run(self, config):
        raise NotImplementedError

    # --- Output ---
    def emit(self, config, data, header=None, rows=None):
        """Render as JSON or CSV and write to --out or stdout."""
        if config.format == 'csv' and header is not None:
            content = render_csv(header, rows)
        else:
            content = render_json(data)
        if config.out:
            write_atomic(config.out, content)
        else:
            self.stdout.write(content.decode(), ending='')
