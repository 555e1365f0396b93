from ballots.services.codec import load_profile
from ballots.services.profiles import as_profile
from core.exceptions import DomainError
from core.management.base import ReportCommand
from manipulation.services.manipulability import (
    brute_force_manipulation,
    find_manipulation,
    voter_report,
)
from scoring.services.rules import parse_rule, winner

METHODS = ('normal-form', 'brute-force')


class Command(ReportCommand):
    help = 'Decides whether some voter can manipulate a rule at a JSON profile.'
    command_name = 'manipulable'

    def add_arguments(self, parser):
        parser.add_argument('--rule', required=True, help='approval:<k>, borda:<k> or borda:m-1')
        parser.add_argument('--profile', required=True, help='Path to a JSON profile document')
        parser.add_argument('--method', choices=METHODS, default='normal-form')
        parser.add_argument(
            '--cross-check',
            action='store_true',
            help='Also run the other method; exit 1 if they disagree on manipulability.',
        )
        parser.add_argument('--voter', type=int, help='Explain the normal-form decision for one voter')

    def compute(self, options):
        profile = as_profile(load_profile(options['profile']))
        rule = parse_rule(options['rule']).resolve(profile.m)
        search = brute_force_manipulation if options['method'] == 'brute-force' else find_manipulation
        witness = search(profile, rule)
        result = {
            'rule': rule.label,
            'winner': winner(profile, rule),
            'manipulable': witness is not None,
            'witness': witness.to_json() if witness else None,
        }
        ok = True
        if options['cross_check']:
            other = find_manipulation if search is brute_force_manipulation else brute_force_manipulation
            agrees = (other(profile, rule) is None) == (witness is None)
            result['methods_agree'] = agrees
            ok = agrees
        if options['voter'] is not None:
            if not 0 <= options['voter'] < profile.n:
                raise DomainError(f'voter: {options["voter"]} is outside [0, {profile.n - 1}]')
            result['voter'] = voter_report(options['voter'], profile, rule)
        return result, ok
