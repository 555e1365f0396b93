from django.test import SimpleTestCase

from ballots.services.profiles import Profile
from core.constants import ClaimId
from core.exceptions import ParameterError
from scoring.services.rules import RuleSpec
from witnesses.services.constructions import CONSTRUCTIONS, Candidates, build_witness
from witnesses.services.verification import verify_witness


def rankings(profile):
    return [ballot.ranking for ballot in profile]


class CandidatesTests(SimpleTestCase):
    def test_ids_follow_letter_then_subscript(self):
        c = Candidates(('A', 2), ('B', 1), ('C', 1))

        self.assertEqual((c('A', 1), c('A', 2), c('B'), c('C')), (0, 1, 2, 3))
        self.assertEqual(c.m, 4)

    def test_reversed_or_empty_ranges(self):
        c = Candidates(('C', 3))

        self.assertEqual(c.up('C', 1, 0), [])
        self.assertEqual(c.down('C', 3, 2), [2, 1])
        self.assertEqual(c.down('C', 0, 1), [])


class BuildWitnessTests(SimpleTestCase):
    def test_two_voter_approval_instance(self):
        case = build_witness(ClaimId.APPROVAL_I_NOT_GEQ_J, {'n': 2, 'm': 3, 'i': 1, 'j': 2})

        self.assertEqual(rankings(case.profile), [(1, 0, 2), (1, 0, 2)])
        self.assertEqual(case.manip_rule, RuleSpec.approval(2))
        self.assertEqual(case.robust_rule, RuleSpec.approval(1))

    def test_full_borda_instance_orders_a_block_first(self):
        case = build_witness(ClaimId.BORDA_FULL_NOT_GEQ_K, {'n': 2, 'm': 4, 'k': 2})

        self.assertEqual(rankings(case.profile), [(2, 3, 0, 1), (3, 0, 1, 2)])
        self.assertEqual(case.manip_rule, RuleSpec.borda(2))
        self.assertEqual(case.robust_rule, RuleSpec.borda(3))
        self.assertTrue(verify_witness(case).ok)

    def test_plurality_construction_for_three_voters(self):
        case = build_witness(ClaimId.APPROVAL_J_NOT_GEQ_1, {'n': 3, 'm': 3, 'j': 2})

        self.assertEqual(rankings(case.profile), [(1, 2, 0), (0, 1, 2), (2, 1, 0)])
        verification = verify_witness(case)
        self.assertTrue(verification.ok)
        self.assertTrue(verification.brute_force['robust_confirmed'])

    def test_precondition_violations_name_the_bound(self):
        cases = (
            (ClaimId.APPROVAL_J_NOT_GEQ_I_EVEN, {'n': 3, 'm': 5, 'i': 1, 'j': 2}, 'n=3'),
            (ClaimId.APPROVAL_J_NOT_GEQ_I_ODD, {'n': 3, 'm': 4, 'i': 1, 'j': 2}, 'i=1'),
            (ClaimId.APPROVAL_J_NOT_GEQ_I_SMALLM, {'n': 2, 'm': 5, 'i': 3, 'j': 4}, '2i=6'),
            (ClaimId.BORDA_J_NOT_GEQ_I_EVEN, {'n': 4, 'm': 4, 'i': 1, 'j': 2}, 'n=4'),
            (ClaimId.BORDA_FULL_NOT_GEQ_K, {'n': 2, 'm': 4, 'k': 3}, 'k=3'),
            (ClaimId.APPROVAL_I_NOT_GEQ_J, {'n': 2, 'm': 3, 'i': 2, 'j': 3}, 'j=3'),
        )
        for claim, params, fragment in cases:
            with self.subTest(claim=claim):
                with self.assertRaises(ParameterError) as caught:
                    build_witness(claim, params)
                self.assertIn(fragment, str(caught.exception))

    def test_missing_parameter(self):
        with self.assertRaises(ParameterError):
            build_witness(ClaimId.BORDA_I_NOT_GEQ_J_EVEN, {'n': 2, 'm': 4})

    def test_composite_claims_have_no_single_profile(self):
        with self.assertRaises(ParameterError):
            build_witness(ClaimId.THM_BORDA_INCOMPARABLE, {'n': 4, 'm': 4, 'i': 1, 'j': 2})

    def test_constructors_always_emit_permutations(self):
        for claim, construction in CONSTRUCTIONS.items():
            for n in range(1, 9):
                for m in range(3, 8):
                    for i in range(1, m):
                        for j in range(i + 1, m):
                            params = {'n': n, 'm': m, 'i': i, 'j': j, 'k': i}
                            values = {name: params[name] for name in construction.params}
                            try:
                                case = build_witness(claim, values, reruns=2)
                            except ParameterError:
                                continue
                            with self.subTest(claim=claim, **values):
                                self.assertIsInstance(case.profile, Profile)
                                self.assertEqual(case.profile.n, n)
                                self.assertEqual(case.profile.m, m)

    def test_any_order_variants_are_seeded(self):
        params = {'n': 3, 'm': 6, 'i': 3, 'j': 5}
        first = build_witness(ClaimId.APPROVAL_J_NOT_GEQ_I_SMALLM, params, seed=4, reruns=5)
        second = build_witness(ClaimId.APPROVAL_J_NOT_GEQ_I_SMALLM, params, seed=4, reruns=5)

        self.assertEqual(len(first.variants), 5)
        self.assertEqual(first.variants, second.variants)
        self.assertTrue(verify_witness(first).ok)


class VerifyWitnessTests(SimpleTestCase):
    def test_two_voter_approval_instance_verifies(self):
        case = build_witness(ClaimId.APPROVAL_I_NOT_GEQ_J, {'n': 2, 'm': 3, 'i': 1, 'j': 2})
        verification = verify_witness(case)

        self.assertTrue(verification.ok)
        report = verification.to_json()
        self.assertEqual(report['manipulation']['new_winner'], 1)
        self.assertEqual(report['scores']['approval:2'], {'0': 2, '1': 2, '2': 0})
        self.assertEqual(report['winners'], {'approval:2': 0, 'approval:1': 1})

    def test_swapped_rules_fail(self):
        case = build_witness(ClaimId.APPROVAL_I_NOT_GEQ_J, {'n': 2, 'm': 3, 'i': 1, 'j': 2})

        self.assertFalse(verify_witness(case.swapped()).ok)

    def test_even_borda_instance_with_five_candidates(self):
        case = build_witness(ClaimId.BORDA_I_NOT_GEQ_J_EVEN, {'n': 2, 'm': 5, 'i': 1, 'j': 2})

        self.assertTrue(verify_witness(case).ok)

    def test_odd_borda_layout_breaks_down_for_three_voters(self):
        # Under 2-Borda candidates 1 and 2 tie on 3 points and no voter can break the tie their way.
        case = build_witness(ClaimId.BORDA_J_NOT_GEQ_I_ODD, {'n': 3, 'm': 4, 'i': 2, 'j': 3})

        self.assertEqual(rankings(case.profile), [(0, 1, 3, 2), (1, 2, 3, 0), (2, 3, 1, 0)])
        verification = verify_witness(case)
        self.assertFalse(verification.ok)
        self.assertIsNone(verification.manipulation)

    def test_odd_borda_layout_holds_from_five_voters(self):
        for m in (4, 5, 6):
            for i in range(1, m - 1):
                for j in range(i + 1, m):
                    case = build_witness(ClaimId.BORDA_J_NOT_GEQ_I_ODD, {'n': 5, 'm': m, 'i': i, 'j': j})
                    with self.subTest(m=m, i=i, j=j):
                        self.assertTrue(verify_witness(case).ok)
