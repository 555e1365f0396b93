from django.conf import settings

from core.management.base import ReportCommand
from ps_compare.services.cache import cached_comparison, invalidate_comparisons
from ps_compare.services.comparison import check_scan_budget, compare_exhaustive
from scoring.services.rules import parse_rule


class Command(ReportCommand):
    help = 'Exhaustively compares how manipulable two rules are at a fixed number of voters and candidates.'
    command_name = 'compare'

    def add_arguments(self, parser):
        parser.add_argument('--f', required=True, help='First rule, e.g. borda:2')
        parser.add_argument('--g', required=True, help='Second rule, e.g. borda:1')
        parser.add_argument('--n', type=int, required=True, help='Number of voters')
        parser.add_argument('--m', type=int, required=True, help='Number of candidates')
        parser.add_argument('--fast', action='store_true', help='Stop once both witnesses are found; omits counts')
        parser.add_argument(
            '--no-anonymize',
            dest='anonymize',
            action='store_false',
            help='Scan every ordered profile instead of ballot multisets',
        )
        parser.add_argument('--workers', type=int, default=None, help='Worker processes (default MANIP_WORKERS)')
        parser.add_argument('--budget', type=int, default=None, help='Profile budget (default MANIP_PROFILE_BUDGET)')
        parser.add_argument('--no-cache', dest='use_cache', action='store_false', help='Bypass the report cache')
        parser.add_argument('--refresh', action='store_true', help='Drop cached comparison reports first')

    def compute(self, options):
        n, m = options['n'], options['m']
        f = parse_rule(options['f']).resolve(m)
        g = parse_rule(options['g']).resolve(m)
        check_scan_budget(n, m, options['anonymize'], options['budget'])
        if options['refresh']:
            invalidate_comparisons()

        def run():
            return compare_exhaustive(
                f, g, n, m,
                anonymize=options['anonymize'],
                fast=options['fast'],
                workers=options['workers'] or settings.MANIP_WORKERS,
                budget=options['budget'],
            ).to_json()

        report = cached_comparison(
            f, g, n, m, run,
            anonymize=options['anonymize'],
            fast=options['fast'],
            use_cache=options['use_cache'],
        )
        return report, True
