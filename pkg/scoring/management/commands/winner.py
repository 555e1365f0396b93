from ballots.services.codec import load_profile
from ballots.services.profiles import as_profile
from core.management.base import ReportCommand
from scoring.services.rules import parse_rule, score_table_json, tally, top_candidate


class Command(ReportCommand):
    help = 'Scores a JSON profile under a rule and prints the winner (lowest id wins ties).'
    command_name = 'winner'

    def add_arguments(self, parser):
        parser.add_argument('--rule', required=True, help='approval:<k>, borda:<k> or borda:m-1')
        parser.add_argument('--profile', required=True, help='Path to a JSON profile document')

    def compute(self, options):
        rule = parse_rule(options['rule'])
        profile = as_profile(load_profile(options['profile']))
        table = tally(profile, rule.resolve(profile.m))
        totals = [table[candidate] for candidate in range(profile.m)]
        return {'winner': top_candidate(totals), 'scores': score_table_json(table)}, True
