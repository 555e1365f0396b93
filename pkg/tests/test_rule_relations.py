"""Exhaustive manipulability relations between approval and Borda rules at small sizes."""
import itertools

from django.test import SimpleTestCase

from core.constants import Relation
from manipulation.services.manipulability import is_manipulable
from ps_compare.services.comparison import check_inclusion, compare_exhaustive
from scoring.services.rules import RuleSpec


def pairs(top):
    for i in range(1, top):
        for j in range(i + 1, top + 1):
            yield i, j


class ApprovalRelationTests(SimpleTestCase):
    def test_approval_rules_are_pairwise_incomparable(self):
        sizes = [(n, m) for n in (2, 3, 4) for m in (3, 4)] + [(2, 5)]
        for n, m in sizes:
            for i, j in pairs(m - 1):
                with self.subTest(n=n, m=m, i=i, j=j):
                    report = compare_exhaustive(RuleSpec.approval(i), RuleSpec.approval(j), n, m)
                    self.assertEqual(report.relation, Relation.INCOMPARABLE)


class BordaRelationTests(SimpleTestCase):
    def test_two_voters_larger_inner_borda_is_strictly_more_manipulable(self):
        for m in (4, 5):
            for k in range(1, m - 2):
                with self.subTest(m=m, k=k):
                    report = compare_exhaustive(RuleSpec.borda(k + 1), RuleSpec.borda(k), 2, m)
                    self.assertEqual(report.relation, Relation.F_STRICTLY_MORE)
                    self.assertIsNone(report.witness_g_not_f)
                    self.assertTrue(is_manipulable(report.witness_f_not_g, RuleSpec.borda(k + 1)))

    def test_two_voter_hierarchy_is_transitive(self):
        for m in (4, 5):
            for i, j in pairs(m - 2):
                with self.subTest(m=m, i=i, j=j):
                    self.assertIsNone(check_inclusion(RuleSpec.borda(j), RuleSpec.borda(i), 2, m))
                    report = compare_exhaustive(RuleSpec.borda(j), RuleSpec.borda(i), 2, m, fast=True)
                    self.assertEqual(report.relation, Relation.F_STRICTLY_MORE)

    def test_full_borda_is_incomparable_for_two_voters(self):
        for m in (4, 5):
            for k in range(1, m - 1):
                with self.subTest(m=m, k=k):
                    report = compare_exhaustive(RuleSpec.borda(m - 1), RuleSpec.borda(k), 2, m)
                    self.assertEqual(report.relation, Relation.INCOMPARABLE)

    def test_borda_rules_are_incomparable_beyond_two_voters(self):
        for n in (3, 4):
            for m in (3, 4):
                for i, j in pairs(m - 1):
                    with self.subTest(n=n, m=m, i=i, j=j):
                        report = compare_exhaustive(RuleSpec.borda(i), RuleSpec.borda(j), n, m)
                        self.assertEqual(report.relation, Relation.INCOMPARABLE)


class MirrorConsistencyTests(SimpleTestCase):
    def test_swapping_rules_transposes_every_report(self):
        for m in (3, 4):
            rules = [spec for k in range(1, m) for spec in (RuleSpec.approval(k), RuleSpec.borda(k))]
            for f, g in itertools.combinations(rules, 2):
                for n in (1, 2, 3):
                    with self.subTest(f=f.label, g=g.label, n=n, m=m):
                        forward = compare_exhaustive(f, g, n, m, fast=True)
                        backward = compare_exhaustive(g, f, n, m, fast=True)
                        self.assertEqual(backward.relation, Relation(forward.relation).transposed())
                        self.assertEqual(backward.to_json(), forward.transposed().to_json())
