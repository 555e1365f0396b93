import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from ballots.services.codec import load_profile, profile_from_json, profile_to_json
from ballots.services.enumeration import (
    count_anonymous_profiles,
    enumerate_anonymous_profiles,
    enumerate_orders,
    enumerate_profiles,
    random_profile,
)
from ballots.services.profiles import AnonymousProfile, LinearOrder, Profile, anonymize, expand
from core.exceptions import BudgetExceeded, DomainError, ProfileFormatError


class LinearOrderTests(SimpleTestCase):
    def test_prefers_follows_positions(self):
        ballot = LinearOrder((2, 0, 1))

        self.assertTrue(ballot.prefers(2, 1))
        self.assertFalse(ballot.prefers(1, 0))
        self.assertEqual(ballot.position(1), 2)
        self.assertEqual(ballot.better_than(1), (2, 0))

    def test_rejects_non_permutation(self):
        with self.assertRaises(DomainError):
            LinearOrder((0, 0, 1))
        with self.assertRaises(DomainError):
            LinearOrder((1, 2, 3))

    def test_profile_rejects_mixed_lengths(self):
        with self.assertRaises(DomainError):
            Profile(m=3, ballots=((0, 1, 2), (0, 1)))
        with self.assertRaises(DomainError):
            Profile(m=3, ballots=())

    def test_of_rejects_an_empty_call(self):
        with self.assertRaisesMessage(DomainError, 'at least one ballot'):
            Profile.of()


class EnumerationTests(SimpleTestCase):
    def test_small_order_lists(self):
        self.assertEqual([order.ranking for order in enumerate_orders(1)], [(0,)])
        self.assertEqual([order.ranking for order in enumerate_orders(2)], [(0, 1), (1, 0)])
        orders = enumerate_orders(3)
        self.assertEqual(len(orders), 6)
        self.assertEqual(orders[0].ranking, (0, 1, 2))
        self.assertEqual(orders[-1].ranking, (2, 1, 0))

    def test_orders_are_distinct_and_complete(self):
        for m, expected in ((4, 24), (5, 120)):
            orders = enumerate_orders(m)
            self.assertEqual(len(set(orders)), expected)
            self.assertEqual(list(orders), sorted(orders))

    def test_candidate_ceiling_is_configurable(self):
        with self.assertRaises(DomainError):
            enumerate_orders(0)
        with override_settings(MANIP_MAX_CANDIDATES=4):
            with self.assertRaises(DomainError):
                enumerate_orders(5)
        self.assertEqual(len(enumerate_orders(5, ceiling=5)), 120)

    def test_anonymous_profile_counts(self):
        for n, m, expected in ((2, 2, 3), (2, 3, 21), (3, 3, 56), (2, 4, 300)):
            profiles = list(enumerate_anonymous_profiles(n, m))
            self.assertEqual(len(profiles), expected)
            self.assertEqual(count_anonymous_profiles(n, m), expected)
            self.assertEqual(len(set(profiles)), expected)
            self.assertTrue(all(profile.n == n for profile in profiles))

    def test_slices_partition_the_enumeration(self):
        whole = list(enumerate_anonymous_profiles(3, 3))
        pieces = (
            list(enumerate_anonymous_profiles(3, 3, start=0, stop=20))
            + list(enumerate_anonymous_profiles(3, 3, start=20, stop=41))
            + list(enumerate_anonymous_profiles(3, 3, start=41))
        )

        self.assertEqual(pieces, whole)

    def test_budget_is_checked_before_iteration(self):
        with self.assertRaises(BudgetExceeded) as caught:
            enumerate_anonymous_profiles(2, 4, budget=299)

        self.assertEqual(caught.exception.count, 300)
        self.assertEqual(caught.exception.budget, 299)

    def test_full_tuple_enumeration(self):
        profiles = list(enumerate_profiles(2, 3))

        self.assertEqual(len(profiles), 36)
        self.assertEqual(len({anonymize(profile) for profile in profiles}), 21)

    def test_random_profile_is_seeded(self):
        import random

        first = random_profile(5, 6, random.Random(7))
        second = random_profile(5, 6, random.Random(7))

        self.assertEqual(first, second)
        self.assertEqual(first.n, 5)


class AnonymityTests(SimpleTestCase):
    def test_anonymize_collapses_duplicates(self):
        anonymous = anonymize(Profile.of((0, 1, 2), (0, 1, 2)))

        self.assertEqual(anonymous.as_dict(), {LinearOrder((0, 1, 2)): 2})
        self.assertEqual(anonymous.n, 2)

    def test_expand_emits_canonical_order(self):
        anonymous = AnonymousProfile(m=3, counts={(1, 0, 2): 1, (0, 1, 2): 1})

        self.assertEqual(
            [ballot.ranking for ballot in expand(anonymous)],
            [(0, 1, 2), (1, 0, 2)],
        )

    def test_round_trip(self):
        for anonymous in enumerate_anonymous_profiles(3, 3):
            self.assertEqual(anonymize(expand(anonymous)), anonymous)

    def test_multiplicity_must_be_positive(self):
        with self.assertRaises(DomainError):
            AnonymousProfile(m=2, counts={(0, 1): 0})


class CodecTests(SimpleTestCase):
    def test_ordered_document(self):
        profile = profile_from_json({'m': 3, 'ballots': [[1, 0, 2], [1, 0, 2]]})

        self.assertEqual(profile, Profile.of((1, 0, 2), (1, 0, 2)))
        self.assertEqual(profile_to_json(profile), {'m': 3, 'ballots': [[1, 0, 2], [1, 0, 2]]})

    def test_anonymous_document(self):
        document = {'m': 3, 'counts': [{'ballot': [1, 0, 2], 'n': 2}]}
        profile = profile_from_json(document)

        self.assertIsInstance(profile, AnonymousProfile)
        self.assertEqual(profile.n, 2)
        self.assertEqual(profile_to_json(profile), document)

    def test_errors_name_the_field(self):
        cases = (
            ({'ballots': [[0, 1]]}, 'm'),
            ({'m': '3', 'ballots': []}, 'm'),
            ({'m': 2, 'ballots': [[0, 'x']]}, 'ballots[0][1]'),
            ({'m': 2, 'ballots': [[0, 0]]}, 'ballots'),
            ({'m': 2, 'counts': [{'ballot': [0, 1]}]}, 'counts[0]'),
            ({'m': 2, 'counts': [{'ballot': [0, 1], 'n': True}]}, 'counts[0].n'),
            ({'m': 2}, 'profile'),
        )
        for document, field in cases:
            with self.subTest(document=document):
                with self.assertRaises(ProfileFormatError) as caught:
                    profile_from_json(document)
                self.assertTrue(str(caught.exception).startswith(field))

    def test_load_profile_reports_bad_json(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'profile.json'
            path.write_text('{"m": 3,', encoding='utf-8')
            with self.assertRaises(ProfileFormatError):
                load_profile(path)
            path.write_text(json.dumps({'m': 2, 'ballots': [[1, 0]]}), encoding='utf-8')
            self.assertEqual(load_profile(path), Profile.of((1, 0)))
