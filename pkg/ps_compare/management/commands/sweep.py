import logging

from django.conf import settings

from core.constants import RuleFamily
from core.exceptions import DomainError
from core.management.base import ReportCommand, parse_int_range
from core.services.parallel import map_in_order
from core.services.reports import build_report, dump_json
from ps_compare.services.comparison import check_scan_budget
from ps_compare.services.sweep import compute_cell, rows_to_csv, sweep_cells

logger = logging.getLogger(__name__)

BACKENDS = ('local', 'celery')
FAMILY_CHOICES = (*RuleFamily.values, 'both')


class Command(ReportCommand):
    help = 'Compares every pair of same-family rules over a grid of (n, m) and writes one CSV row per pair.'
    command_name = 'sweep'

    def add_arguments(self, parser):
        parser.add_argument('--family', choices=FAMILY_CHOICES, default='both')
        parser.add_argument('--n', required=True, help='Voter counts: N, A..B or a comma list')
        parser.add_argument('--m', required=True, help='Candidate counts: N, A..B or a comma list')
        parser.add_argument('--i', help='Restrict the smaller parameter')
        parser.add_argument('--j', help='Restrict the larger parameter')
        parser.add_argument('--no-anonymize', dest='anonymize', action='store_false')
        parser.add_argument('--budget', type=int, default=None, help='Per-cell profile budget')
        parser.add_argument('--no-cache', dest='use_cache', action='store_false')
        parser.add_argument('--workers', type=int, default=None, help='Worker processes for --backend local')
        parser.add_argument('--backend', choices=BACKENDS, default='local')
        parser.add_argument('--format', choices=('csv', 'json'), default='csv')
        parser.add_argument('--output', help='Write the report to this file instead of stdout')

    def compute(self, options):
        families = RuleFamily.values if options['family'] == 'both' else [options['family']]
        ns = parse_int_range(options['n'], 'n')
        ms = parse_int_range(options['m'], 'm')
        cells = sweep_cells(
            families,
            ns,
            ms,
            i_range=parse_int_range(options['i'], 'i') if options['i'] else None,
            j_range=parse_int_range(options['j'], 'j') if options['j'] else None,
            anonymize=options['anonymize'],
            budget=options['budget'],
            use_cache=options['use_cache'],
        )
        if not cells:
            raise DomainError('sweep: the grid holds no pair 1 <= i < j <= m-1')
        for n in ns:
            for m in ms:
                check_scan_budget(n, m, options['anonymize'], options['budget'])
        logger.info('Sweeping %d cells on the %s backend', len(cells), options['backend'])
        if options['backend'] == 'celery':
            rows = self._run_celery(cells)
        else:
            rows = map_in_order(compute_cell, cells, options['workers'] or settings.MANIP_WORKERS)
        return rows, True

    @staticmethod
    def _run_celery(cells):
        from ps_compare.tasks import compare_cell_task

        pending = [compare_cell_task.delay(cell.to_json()) for cell in cells]
        return [result.get(timeout=settings.CELERY_SWEEP_RESULT_TIMEOUT) for result in pending]

    def render(self, options, result):
        if options['format'] == 'json':
            return dump_json(build_report(self.command_name, options, {'rows': result}))
        return rows_to_csv(result)
