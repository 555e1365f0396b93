"""
Invariants of scoring and manipulability over the full small enumeration
(n <= 3, m <= 4) plus seeded random profiles with five to seven candidates.
"""
import itertools
import random

from django.test import SimpleTestCase

from ballots.services.enumeration import enumerate_anonymous_profiles, random_profile
from ballots.services.profiles import anonymize, expand
from manipulation.services.manipulability import anonymous_manipulation, find_manipulation
from scoring.services.rules import RuleSpec, scoring_vector, tally, winner

RANDOM_PROFILES = 1000
SEED = 20240517


def rules_for(m):
    for k in range(1, m):
        yield RuleSpec.approval(k)
        yield RuleSpec.borda(k)


def small_profiles():
    for n in range(1, 4):
        for m in range(2, 5):
            for anonymous in enumerate_anonymous_profiles(n, m):
                yield expand(anonymous)


def random_profiles():
    rng = random.Random(SEED)
    for index in range(RANDOM_PROFILES):
        m = (5, 6, 7)[index % 3]
        yield random_profile(rng.randint(1, 6), m, rng)


class PropertySuiteTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.small = list(small_profiles())
        cls.sampled = list(random_profiles())
        cls.profiles = cls.small + cls.sampled

    def assert_same_outcomes(self, profile, reordered):
        for rule in rules_for(profile.m):
            self.assertEqual(winner(reordered, rule), winner(profile, rule))
            manipulable = find_manipulation(profile, rule) is not None
            self.assertEqual(find_manipulation(reordered, rule) is not None, manipulable)
            self.assertEqual(anonymous_manipulation(anonymize(reordered), rule) is not None, manipulable)

    def test_scores_sum_to_n_times_vector_total(self):
        for profile in self.profiles:
            for rule in rules_for(profile.m):
                total = sum(tally(profile, rule).values())
                self.assertEqual(total, profile.n * sum(scoring_vector(rule, profile.m).scores))

    def test_winner_is_lowest_id_among_top_scores(self):
        for profile in self.profiles:
            for rule in rules_for(profile.m):
                table = tally(profile, rule)
                best = max(table.values())
                self.assertEqual(
                    winner(profile, rule),
                    min(candidate for candidate, score in table.items() if score == best),
                )

    def test_results_ignore_every_voter_order_on_small_profiles(self):
        for profile in self.small:
            for order in itertools.permutations(range(profile.n)):
                self.assert_same_outcomes(profile, profile.permuted(order))

    def test_results_ignore_voter_order_on_sampled_profiles(self):
        rng = random.Random(SEED)
        for profile in self.sampled:
            order = list(range(profile.n))
            rng.shuffle(order)
            self.assert_same_outcomes(profile, profile.permuted(order))

    def test_next_borda_raises_each_score_by_at_most_n(self):
        for profile in self.profiles:
            for k in range(1, profile.m - 1):
                lower = tally(profile, RuleSpec.borda(k))
                upper = tally(profile, RuleSpec.borda(k + 1))
                for candidate in range(profile.m):
                    self.assertGreaterEqual(upper[candidate] - lower[candidate], 0)
                    self.assertLessEqual(upper[candidate] - lower[candidate], profile.n)

    def test_witnesses_certify_themselves(self):
        for profile in self.profiles:
            for rule in rules_for(profile.m):
                witness = find_manipulation(profile, rule)
                if witness is None:
                    continue
                self.assertTrue(witness.certifies(profile, rule))
                self.assertEqual(witness.sincere_winner, winner(profile, rule))
                replayed = profile.replace(witness.voter, witness.misreport)
                self.assertEqual(winner(replayed, rule), witness.new_winner)
                self.assertTrue(profile.ballots[witness.voter].prefers(witness.new_winner, witness.sincere_winner))
