import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import DomainError, ManipulabilityError
from core.observability import run_context
from core.services.reports import build_report, dump_json

logger = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2


class ReportCommand(BaseCommand):
    """
    Shared shape of every CLI command.

    Subclasses implement ``compute(options)`` and return ``(result, ok)``;
    the report goes to stdout and a falsy ``ok`` turns into exit code 1.
    Every toolkit error becomes exit code 2 with its message on stderr.
    """

    command_name = None

    def handle(self, *args, **options):
        with run_context():
            try:
                result, ok = self.compute(options)
                self.emit(options, self.render(options, result))
            except ManipulabilityError as exc:
                logger.warning('%s rejected its input: %s', self.command_name, exc)
                raise CommandError(str(exc), returncode=EXIT_INVALID_INPUT) from exc
        if not ok:
            raise CommandError(
                f'{self.command_name}: verification failed',
                returncode=EXIT_VERIFICATION_FAILED,
            )

    def compute(self, options):
        raise NotImplementedError

    def emit(self, options, text):
        output = options.get('output')
        if not output:
            self.stdout.write(text)
            return
        try:
            Path(output).write_text(text if text.endswith('\n') else text + '\n', encoding='utf-8')
        except OSError as exc:
            raise DomainError(f'output: cannot write {output}: {exc.strerror or exc}') from exc
        logger.info('%s report written to %s', self.command_name, output)

    def render(self, options, result):
        return dump_json(build_report(self.command_name, options, result))


def parse_int_range(text, field):
    """``"3"``, ``"2..4"`` (inclusive) or ``"2,4,6"`` as a sorted tuple of ints."""
    values = set()
    try:
        for part in str(text).split(','):
            low, separator, high = part.strip().partition('..')
            low = int(low)
            values.update(range(low, int(high) + 1) if separator else (low,))
    except ValueError as exc:
        raise DomainError(f'{field}: expected N, A..B or a comma list, got {text!r}') from exc
    if not values:
        raise DomainError(f'{field}: range {text!r} is empty')
    return tuple(sorted(values))
