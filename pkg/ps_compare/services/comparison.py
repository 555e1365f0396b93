"""
Exhaustive Pathak-Sonmez comparison of two rules at a fixed ``(n, m)``.

``f`` is at least as manipulable as ``g`` when every profile where ``g`` is
manipulable is also one where ``f`` is. The scan folds over the canonical
enumeration of anonymous profiles (or of all ordered profiles with
``anonymize=False``), keeping exact counts and the first profile of each
non-inclusion direction.
"""
import logging
from dataclasses import dataclass, field

from django.conf import settings

from ballots.services.codec import profile_to_json
from ballots.services.enumeration import (
    check_candidate_count,
    check_voter_count,
    count_anonymous_profiles,
    count_profiles,
    enumerate_anonymous_profiles,
    enumerate_profiles,
)
from ballots.services.profiles import as_profile
from core.constants import Relation
from core.exceptions import BudgetExceeded
from core.services.parallel import run_partitioned
from manipulation.services.manipulability import find_manipulation, is_manipulable

logger = logging.getLogger(__name__)

G_NOT_F = 'g_not_f'
F_NOT_G = 'f_not_g'


@dataclass(frozen=True)
class ScanCounts:
    profiles_scanned: int = 0
    manip_f: int = 0
    manip_g: int = 0
    manip_both: int = 0

    def __add__(self, other):
        return ScanCounts(
            self.profiles_scanned + other.profiles_scanned,
            self.manip_f + other.manip_f,
            self.manip_g + other.manip_g,
            self.manip_both + other.manip_both,
        )

    def to_json(self):
        return {
            'profiles_scanned': self.profiles_scanned,
            'manip_f': self.manip_f,
            'manip_g': self.manip_g,
            'manip_both': self.manip_both,
        }


@dataclass(frozen=True)
class SlicePart:
    """What one ``[start, stop)`` slice of the enumeration contributes."""

    counts: ScanCounts
    # (canonical index, profile) or None
    g_not_f: tuple = None
    f_not_g: tuple = None


def _earliest(left, right):
    if left is None:
        return right
    if right is None:
        return left
    return left if left[0] <= right[0] else right


def merge_parts(parts):
    counts = ScanCounts()
    g_not_f = f_not_g = None
    for part in parts:
        counts += part.counts
        g_not_f = _earliest(g_not_f, part.g_not_f)
        f_not_g = _earliest(f_not_g, part.f_not_g)
    return SlicePart(counts=counts, g_not_f=g_not_f, f_not_g=f_not_g)


def scan_size(n, m, anonymize=True):
    check_voter_count(n)
    check_candidate_count(m)
    return count_anonymous_profiles(n, m) if anonymize else count_profiles(n, m)


def check_scan_budget(n, m, anonymize=True, budget=None):
    """Profile count of the scan; refuses before any work when it exceeds the budget."""
    total = scan_size(n, m, anonymize)
    budget = settings.MANIP_PROFILE_BUDGET if budget is None else budget
    if total > budget:
        raise BudgetExceeded(total, budget)
    return total


def _profiles(n, m, anonymize, ceiling, start, stop):
    enumerate_slice = enumerate_anonymous_profiles if anonymize else enumerate_profiles
    return enumerate_slice(n, m, start=start, stop=stop, ceiling=ceiling)


def scan_slice(f, g, n, m, anonymize, directions, fast, ceiling, start, stop):
    """
    Fold ``[start, stop)`` of the enumeration.

    ``directions`` names the non-inclusions to look for. With ``fast`` the
    slice stops once each of them has a profile; its counts are then partial
    and must not be reported.
    """
    scanned = manip_f = manip_g = manip_both = 0
    found = {}
    for index, profile in enumerate(_profiles(n, m, anonymize, ceiling, start, stop), start):
        f_hit = is_manipulable(profile, f)
        g_hit = is_manipulable(profile, g)
        scanned += 1
        manip_f += f_hit
        manip_g += g_hit
        manip_both += f_hit and g_hit
        if g_hit and not f_hit and G_NOT_F in directions:
            found.setdefault(G_NOT_F, (index, profile))
        if f_hit and not g_hit and F_NOT_G in directions:
            found.setdefault(F_NOT_G, (index, profile))
        if fast and len(found) == len(directions):
            break
    return SlicePart(
        counts=ScanCounts(scanned, manip_f, manip_g, manip_both),
        g_not_f=found.get(G_NOT_F),
        f_not_g=found.get(F_NOT_G),
    )


def _scan(f, g, n, m, anonymize, directions, fast, workers, budget):
    f, g = f.resolve(m), g.resolve(m)
    total = check_scan_budget(n, m, anonymize, budget)
    logger.info(
        'Scanning %d %s profiles for %s vs %s',
        total,
        'anonymous' if anonymize else 'ordered',
        f.label,
        g.label,
        extra={'n': n, 'm': m, 'workers': workers},
    )
    slice_args = (f, g, n, m, anonymize, frozenset(directions), fast, settings.MANIP_MAX_CANDIDATES)
    parts = run_partitioned(scan_slice, total, workers, args=slice_args)
    merged = merge_parts(parts)
    logger.info('Scan finished', extra={'counts': merged.counts.to_json(), 'fast': fast})
    return f, g, merged


def classify(has_g_not_f, has_f_not_g):
    if has_g_not_f and has_f_not_g:
        return Relation.INCOMPARABLE
    if has_f_not_g:
        return Relation.F_STRICTLY_MORE
    if has_g_not_f:
        return Relation.G_STRICTLY_MORE
    return Relation.EQUIVALENT


@dataclass(frozen=True)
class ComparisonReport:
    rule_f: object
    rule_g: object
    n: int
    m: int
    relation: Relation
    witness_g_not_f: object = None
    witness_f_not_g: object = None
    counts: ScanCounts = None
    anonymized: bool = field(default=True)

    def transposed(self):
        return ComparisonReport(
            rule_f=self.rule_g,
            rule_g=self.rule_f,
            n=self.n,
            m=self.m,
            relation=Relation(self.relation).transposed(),
            witness_g_not_f=self.witness_f_not_g,
            witness_f_not_g=self.witness_g_not_f,
            counts=None if self.counts is None else ScanCounts(
                self.counts.profiles_scanned,
                self.counts.manip_g,
                self.counts.manip_f,
                self.counts.manip_both,
            ),
            anonymized=self.anonymized,
        )

    def to_json(self):
        return {
            'f': self.rule_f.label,
            'g': self.rule_g.label,
            'n': self.n,
            'm': self.m,
            'mode': 'anonymous' if self.anonymized else 'ordered',
            'relation': Relation(self.relation).value,
            'witnesses': {
                G_NOT_F: witness_json(self.witness_g_not_f, self.rule_g),
                F_NOT_G: witness_json(self.witness_f_not_g, self.rule_f),
            },
            'counts': None if self.counts is None else self.counts.to_json(),
        }


def witness_json(profile, manipulated_rule):
    """A witness profile and the manipulation that the manipulated rule admits there."""
    if profile is None:
        return None
    witness = find_manipulation(as_profile(profile), manipulated_rule)
    return {'profile': profile_to_json(profile), 'manipulation': witness.to_json()}


def compare_exhaustive(f, g, n, m, anonymize=True, fast=False, workers=1, budget=None):
    f, g, merged = _scan(f, g, n, m, anonymize, (G_NOT_F, F_NOT_G), fast, workers, budget)
    g_not_f = merged.g_not_f[1] if merged.g_not_f else None
    f_not_g = merged.f_not_g[1] if merged.f_not_g else None
    return ComparisonReport(
        rule_f=f,
        rule_g=g,
        n=n,
        m=m,
        relation=classify(g_not_f is not None, f_not_g is not None),
        witness_g_not_f=g_not_f,
        witness_f_not_g=f_not_g,
        counts=None if fast else merged.counts,
        anonymized=anonymize,
    )


def check_inclusion(f, g, n, m, anonymize=True, workers=1, budget=None):
    """First profile where ``g`` is manipulable and ``f`` is not, or ``None`` when ``f >= g``."""
    _, _, merged = _scan(f, g, n, m, anonymize, (G_NOT_F,), True, workers, budget)
    return merged.g_not_f[1] if merged.g_not_f else None
