"""
Machine verification of witness profiles and of claims over parameter grids.

A tuple ends up ``pass``, ``fail`` (a construction that should hold did not
verify, or an exhaustive inclusion broke) or ``uncovered`` (no construction's
preconditions match it).
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from ballots.services.codec import profile_to_json
from core.constants import ClaimId, VerificationStatus
from core.exceptions import ParameterError
from core.services.parallel import map_in_order
from manipulation.services.manipulability import brute_force_manipulation, find_manipulation
from ps_compare.services.comparison import check_inclusion
from scoring.services.rules import RuleSpec, score_table_json, tally, winner
from witnesses.services.catalogue import CONSTRUCTION, claim_entry
from witnesses.services.constructions import CONSTRUCTIONS, build_witness

logger = logging.getLogger(__name__)

CONSTRUCTION_READING_FAILURE = 'construction-reading-failure'
INCLUSION_VIOLATED = 'inclusion-violated'


@dataclass(frozen=True)
class VerifyOptions:
    seed: int = 0
    reruns: int = 0
    brute_force_max_m: int = 0
    budget: int = None

    @classmethod
    def from_settings(cls, seed=None, reruns=None, budget=None):
        return cls(
            seed=settings.MANIP_DEFAULT_SEED if seed is None else seed,
            reruns=settings.MANIP_ANY_ORDER_RERUNS if reruns is None else reruns,
            brute_force_max_m=min(settings.MANIP_BRUTE_FORCE_MAX_M, settings.MANIP_MAX_CANDIDATES),
            budget=budget,
        )


@dataclass(frozen=True)
class WitnessVerification:
    case: object
    ok: bool
    manipulation: object
    robust_manipulation: object
    brute_force: dict
    failing_variants: tuple

    def to_json(self):
        case = self.case
        manip, robust = case.manip_rule, case.robust_rule
        return {
            'ok': self.ok,
            'claim': case.claim,
            'params': dict(case.params),
            'profile': profile_to_json(case.profile),
            'manip_rule': manip.label,
            'robust_rule': robust.label,
            'winners': {
                manip.label: winner(case.profile, manip),
                robust.label: winner(case.profile, robust),
            },
            'scores': {
                manip.label: score_table_json(tally(case.profile, manip)),
                robust.label: score_table_json(tally(case.profile, robust)),
            },
            'manipulation': self.manipulation.to_json() if self.manipulation else None,
            'robust_manipulation': self.robust_manipulation.to_json() if self.robust_manipulation else None,
            'brute_force': self.brute_force,
            'variants': {'checked': len(case.variants), 'failing': list(self.failing_variants)},
        }


def _separates(profile, manip_rule, robust_rule, brute_force_max_m):
    manipulation = find_manipulation(profile, manip_rule)
    robust_manipulation = find_manipulation(profile, robust_rule)
    ok = (
        manipulation is not None
        and robust_manipulation is None
        and manipulation.certifies(profile, manip_rule)
    )
    brute_force = {'checked': False}
    if profile.m <= brute_force_max_m:
        manip_confirmed = brute_force_manipulation(profile, manip_rule) is not None
        robust_confirmed = brute_force_manipulation(profile, robust_rule) is None
        brute_force = {
            'checked': True,
            'manip_confirmed': manip_confirmed,
            'robust_confirmed': robust_confirmed,
        }
        ok = ok and manip_confirmed and robust_confirmed
    return ok, manipulation, robust_manipulation, brute_force


def verify_witness(case, brute_force_max_m=None):
    """
    True iff ``case.manip_rule`` is manipulable at the profile and
    ``case.robust_rule`` is not, for the profile and for every variant.

    Up to ``brute_force_max_m`` candidates both verdicts are also confirmed
    against the brute-force oracle.
    """
    if brute_force_max_m is None:
        brute_force_max_m = min(settings.MANIP_BRUTE_FORCE_MAX_M, settings.MANIP_MAX_CANDIDATES)
    ok, manipulation, robust_manipulation, brute_force = _separates(
        case.profile, case.manip_rule, case.robust_rule, brute_force_max_m,
    )
    failing = tuple(
        index
        for index, variant in enumerate(case.variants)
        if not _separates(variant, case.manip_rule, case.robust_rule, brute_force_max_m)[0]
    )
    return WitnessVerification(
        case=case,
        ok=ok and not failing,
        manipulation=manipulation,
        robust_manipulation=robust_manipulation,
        brute_force=brute_force,
        failing_variants=failing,
    )


# Which construction covers a tuple of a composite claim.

def approval_j_not_geq_i_claim(n, m, i, j):
    if i == 1:
        return ClaimId.APPROVAL_J_NOT_GEQ_1
    if m >= 2 * j:
        return ClaimId.APPROVAL_J_NOT_GEQ_I_EVEN if n % 2 == 0 else ClaimId.APPROVAL_J_NOT_GEQ_I_ODD
    return ClaimId.APPROVAL_J_NOT_GEQ_I_SMALLM


def borda_i_not_geq_j_claim(n):
    return ClaimId.BORDA_I_NOT_GEQ_J_EVEN if n % 2 == 0 else ClaimId.BORDA_I_NOT_GEQ_J_ODD


def borda_j_not_geq_i_claim(n):
    if n <= 2:
        return None
    if n % 2 == 1:
        return ClaimId.BORDA_J_NOT_GEQ_I_ODD
    if n == 4:
        return ClaimId.BORDA_J_NOT_GEQ_I_N4
    return ClaimId.BORDA_J_NOT_GEQ_I_EVEN


def _leaf(claim, params, status, reason='', report=None):
    return {
        'claim': ClaimId(claim).value,
        'params': dict(params),
        'status': VerificationStatus(status).value,
        'reason': reason,
        'report': report,
    }


def _uncovered(claim, params, reason):
    return _leaf(claim, params, VerificationStatus.UNCOVERED, reason)


def _construction_leaf(claim, params, options):
    construction = CONSTRUCTIONS[ClaimId(claim)]
    values = {name: params[name] for name in construction.params}
    try:
        case = build_witness(claim, values, seed=options.seed, reruns=options.reruns)
    except ParameterError as exc:
        return _uncovered(claim, values, str(exc))
    verification = verify_witness(case, options.brute_force_max_m)
    if verification.ok:
        return _leaf(claim, values, VerificationStatus.PASS, report=verification.to_json())
    logger.warning('%s does not verify at %s', claim, case.label())
    return _leaf(claim, values, VerificationStatus.FAIL, CONSTRUCTION_READING_FAILURE, verification.to_json())


def _inclusion_leaf(n, m, upper, lower, options):
    """Exhaustive check that ``borda:upper`` is manipulable wherever ``borda:lower`` is."""
    params = {'n': n, 'm': m, 'upper': upper, 'lower': lower}
    profile = check_inclusion(RuleSpec.borda(upper), RuleSpec.borda(lower), n, m, budget=options.budget)
    if profile is None:
        return _leaf(ClaimId.BORDA_N2_HIERARCHY, params, VerificationStatus.PASS)
    return _leaf(
        ClaimId.BORDA_N2_HIERARCHY,
        params,
        VerificationStatus.FAIL,
        INCLUSION_VIOLATED,
        {'profile': profile_to_json(profile)},
    )


def _leaves(claim, params, options):
    claim = ClaimId(claim)
    n, m = params['n'], params['m']
    if claim in CONSTRUCTIONS:
        return [_construction_leaf(claim, params, options)]
    if claim == ClaimId.COR_APPROVAL_J_NOT_GEQ_I:
        return _leaves(approval_j_not_geq_i_claim(n, m, params['i'], params['j']), params, options)
    if claim == ClaimId.THM_APPROVAL_INCOMPARABLE:
        return (
            _leaves(ClaimId.APPROVAL_I_NOT_GEQ_J, params, options)
            + _leaves(ClaimId.COR_APPROVAL_J_NOT_GEQ_I, params, options)
        )
    if claim == ClaimId.COR_BORDA_I_NOT_GEQ_J:
        return _leaves(borda_i_not_geq_j_claim(n), params, options)
    if claim == ClaimId.COR_BORDA_J_NOT_GEQ_I:
        chosen = borda_j_not_geq_i_claim(n)
        if chosen is None:
            return [_uncovered(claim, params, f'n={n} must be greater than 2')]
        return _leaves(chosen, params, options)
    if claim == ClaimId.THM_BORDA_INCOMPARABLE:
        return (
            _leaves(ClaimId.COR_BORDA_I_NOT_GEQ_J, params, options)
            + _leaves(ClaimId.COR_BORDA_J_NOT_GEQ_I, params, options)
        )
    if claim == ClaimId.BORDA_N2_HIERARCHY:
        return [_inclusion_leaf(n, m, params['k'] + 1, params['k'], options)]
    if claim == ClaimId.COR_BORDA_N2_STRICT:
        return (
            [_inclusion_leaf(n, m, params['j'], params['i'], options)]
            + _leaves(ClaimId.BORDA_I_NOT_GEQ_J_EVEN, params, options)
        )
    if claim == ClaimId.BORDA_FULL_INCOMPARABLE:
        k = params['k']
        return (
            _leaves(ClaimId.BORDA_FULL_NOT_GEQ_K, params, options)
            + _leaves(ClaimId.BORDA_I_NOT_GEQ_J_EVEN, {'n': n, 'm': m, 'i': k, 'j': m - 1}, options)
        )
    raise ParameterError(f'claim: {claim.value} has no verification procedure')


def combine(statuses):
    if VerificationStatus.FAIL in statuses:
        return VerificationStatus.FAIL
    if VerificationStatus.UNCOVERED in statuses:
        return VerificationStatus.UNCOVERED
    return VerificationStatus.PASS


def verify_tuple(job):
    """One grid tuple; module-level so the process pool can pickle it."""
    claim, params, options = job
    leaves = _leaves(claim, params, options)
    status = combine([leaf['status'] for leaf in leaves])
    reasons = sorted({leaf['reason'] for leaf in leaves if leaf['reason']})
    return {
        'params': dict(params),
        'status': VerificationStatus(status).value,
        'reason': '; '.join(reasons),
        'components': leaves,
    }


# Parameter shape of each claim's grid and the voter counts it speaks about.
PAIR, PLURALITY_PAIR, INNER_PAIR, FULL_K, HIERARCHY_K = 'pair', 'plurality', 'inner', 'full_k', 'hierarchy_k'

CLAIM_SHAPES = {
    ClaimId.APPROVAL_J_NOT_GEQ_1: PLURALITY_PAIR,
    ClaimId.BORDA_FULL_NOT_GEQ_K: FULL_K,
    ClaimId.BORDA_FULL_INCOMPARABLE: FULL_K,
    ClaimId.BORDA_N2_HIERARCHY: HIERARCHY_K,
    ClaimId.COR_BORDA_N2_STRICT: INNER_PAIR,
}

VOTER_DOMAINS = {
    ClaimId.COR_APPROVAL_J_NOT_GEQ_I: lambda n: n >= 2,
    ClaimId.THM_APPROVAL_INCOMPARABLE: lambda n: n >= 2,
    ClaimId.COR_BORDA_I_NOT_GEQ_J: lambda n: n >= 2,
    ClaimId.COR_BORDA_J_NOT_GEQ_I: lambda n: n > 2,
    ClaimId.THM_BORDA_INCOMPARABLE: lambda n: n > 2,
    ClaimId.BORDA_N2_HIERARCHY: lambda n: n == 2,
    ClaimId.COR_BORDA_N2_STRICT: lambda n: n == 2,
    ClaimId.BORDA_FULL_INCOMPARABLE: lambda n: n == 2,
}


def _within(value, allowed):
    return allowed is None or value in allowed


def grid_tuples(claim, ns, ms, i_range=None, j_range=None, k_range=None):
    """Parameter tuples of ``claim`` in the grid, sorted by ``(n, m, ...)``."""
    claim = ClaimId(claim)
    shape = CLAIM_SHAPES.get(claim, PAIR)
    in_domain = VOTER_DOMAINS.get(claim, lambda n: n >= 1)
    tuples = []
    for n in sorted(ns):
        if not in_domain(n):
            continue
        for m in sorted(ms):
            if shape in (FULL_K, HIERARCHY_K):
                top = m - 2 if shape == FULL_K else m - 3
                tuples.extend(
                    {'n': n, 'm': m, 'k': k} for k in range(1, top + 1) if _within(k, k_range)
                )
                continue
            top = m - 2 if shape == INNER_PAIR else m - 1
            for i in range(1, top):
                if not _within(i, i_range) or (shape == PLURALITY_PAIR and i != 1):
                    continue
                for j in range(i + 1, top + 1):
                    if not _within(j, j_range):
                        continue
                    if shape == PLURALITY_PAIR:
                        tuples.append({'n': n, 'm': m, 'j': j})
                    else:
                        tuples.append({'n': n, 'm': m, 'i': i, 'j': j})
    return tuples


def _in_preconditions(claim, params):
    try:
        CONSTRUCTIONS[ClaimId(claim)].build(**params)
    except ParameterError:
        return False
    return True


@dataclass(frozen=True)
class ClaimSummary:
    claim: str
    title: str
    results: tuple
    skipped: int

    @property
    def counts(self):
        counts = {status.value: 0 for status in VerificationStatus}
        for result in self.results:
            counts[result['status']] += 1
        counts['skipped'] = self.skipped
        return counts

    @property
    def failed(self):
        return any(result['status'] == VerificationStatus.FAIL for result in self.results)

    def to_json(self):
        return {
            'claim': self.claim,
            'title': self.title,
            'status': VerificationStatus.FAIL.value if self.failed else VerificationStatus.PASS.value,
            'counts': self.counts,
            'tuples': list(self.results),
        }


def verify_claim(claim, ns, ms, i_range=None, j_range=None, k_range=None, options=None, workers=1):
    """
    Verify ``claim`` on every tuple of the grid.

    Construction claims skip tuples outside their preconditions; composite
    claims report such tuples as ``uncovered`` instead.
    """
    entry = claim_entry(claim)
    options = options or VerifyOptions.from_settings()
    tuples = grid_tuples(entry.id, ns, ms, i_range, j_range, k_range)
    skipped = 0
    if entry.kind == CONSTRUCTION:
        kept = [params for params in tuples if _in_preconditions(entry.id, params)]
        skipped = len(tuples) - len(kept)
        tuples = kept
    logger.info(
        'Verifying %s on %d tuples',
        entry.id,
        len(tuples),
        extra={'claim': entry.id, 'kind': entry.kind, 'skipped': skipped},
    )
    results = map_in_order(verify_tuple, [(entry.id, params, options) for params in tuples], workers)
    summary = ClaimSummary(claim=entry.id, title=entry.title, results=tuple(results), skipped=skipped)
    logger.info('%s verified', entry.id, extra={'counts': summary.counts})
    return summary

