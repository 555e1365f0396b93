from django.conf import settings

from core.constants import ClaimId
from core.exceptions import ParameterError
from core.management.base import ReportCommand, parse_int_range
from witnesses.services.catalogue import claim_entry
from witnesses.services.verification import VerifyOptions, verify_claim


class Command(ReportCommand):
    help = 'Builds and machine-checks the witness profiles behind a claim over a parameter grid.'
    command_name = 'verify'

    def add_arguments(self, parser):
        parser.add_argument('--claim', required=True, choices=ClaimId.values)
        parser.add_argument('--n', help='Voter counts: N, A..B or a comma list (default from the claims catalogue)')
        parser.add_argument('--m', help='Candidate counts (default from the claims catalogue)')
        parser.add_argument('--i', help='Restrict the smaller rule parameter')
        parser.add_argument('--j', help='Restrict the larger rule parameter')
        parser.add_argument('--k', help='Restrict k for the full-Borda and two-voter hierarchy claims')
        parser.add_argument('--seed', type=int, default=None, help='Seed for "any order" re-runs')
        parser.add_argument('--reruns', type=int, default=None, help='Shuffled re-runs of "any order" blocks')
        parser.add_argument('--budget', type=int, default=None, help='Profile budget for exhaustive checks')
        parser.add_argument('--workers', type=int, default=None)
        parser.add_argument('--format', choices=('json', 'table'), default='json')
        parser.add_argument('--output', help='Write the report to this file instead of stdout')

    def compute(self, options):
        entry = claim_entry(options['claim'])
        ranges = {}
        for name in ('n', 'm', 'i', 'j', 'k'):
            text = options[name] or entry.grid.get(name)
            ranges[name] = parse_int_range(text, name) if text else None
        if ranges['n'] is None or ranges['m'] is None:
            raise ParameterError(f'{entry.id}: --n and --m are required (no default grid)')
        if options['reruns'] is not None and options['reruns'] < 0:
            raise ParameterError(f'reruns: {options["reruns"]} must not be negative')
        summary = verify_claim(
            entry.id,
            ranges['n'],
            ranges['m'],
            i_range=ranges['i'],
            j_range=ranges['j'],
            k_range=ranges['k'],
            options=VerifyOptions.from_settings(
                seed=options['seed'],
                reruns=options['reruns'],
                budget=options['budget'],
            ),
            workers=options['workers'] or settings.MANIP_WORKERS,
        )
        return summary.to_json(), not summary.failed

    def render(self, options, result):
        if options['format'] == 'table':
            return render_table(result)
        return super().render(options, result)


def _params(params):
    return ' '.join(f'{key}={value}' for key, value in params.items())


def render_table(summary):
    lines = [f'{summary["claim"]}: {summary["title"]}', '']
    for result in summary['tuples']:
        status = result['status'].upper()
        reason = f'  ({result["reason"]})' if result['reason'] else ''
        lines.append(f'{status:<10}{_params(result["params"])}{reason}')
        if len(result['components']) > 1 or result['status'] != 'pass':
            for leaf in result['components']:
                lines.append(f'    {leaf["status"]:<10}{leaf["claim"]} {_params(leaf["params"])}')
    counts = summary['counts']
    lines.append('')
    lines.append(
        f'pass={counts["pass"]} fail={counts["fail"]} '
        f'uncovered={counts["uncovered"]} skipped={counts["skipped"]}'
    )
    return '\n'.join(lines)
