"""
k-approval and k-Borda scoring with lexicographic tie-breaking.

Rule strings are ``approval:<k>``, ``borda:<k>`` and ``borda:m-1``; the last
one stays symbolic until it is resolved against an election's ``m``.
"""
import re
from dataclasses import dataclass

from core.constants import RuleFamily
from core.exceptions import RuleError

RULE_PATTERN = re.compile(r'^\s*(?P<family>[a-z]+)\s*:\s*(?P<k>\d+|m-1)\s*$', re.IGNORECASE)

FULL_BORDA = 'm-1'


@dataclass(frozen=True)
class RuleSpec:
    """A rule family and its parameter; ``k is None`` means ``m - 1``."""

    family: str
    k: int = None

    def __post_init__(self):
        if self.family not in RuleFamily.values:
            raise RuleError(f'rule family {self.family!r} is not one of {", ".join(RuleFamily.values)}')
        # Plain str so specs built from enum members and from parsed text hash alike.
        object.__setattr__(self, 'family', RuleFamily(self.family).value)
        if self.k is None and self.family != RuleFamily.BORDA:
            raise RuleError('only borda accepts the m-1 alias')
        if self.k is not None and (not isinstance(self.k, int) or self.k < 1):
            raise RuleError(f'rule parameter k={self.k} must be a positive integer')

    @classmethod
    def approval(cls, k):
        return cls(RuleFamily.APPROVAL, k)

    @classmethod
    def borda(cls, k=None):
        return cls(RuleFamily.BORDA, k)

    def k_for(self, m):
        k = m - 1 if self.k is None else self.k
        if not 1 <= k <= m - 1:
            raise RuleError(f'{self.label}: k={k} is outside [1, {m - 1}] for m={m}')
        return k

    def resolve(self, m):
        """The concrete rule for an election of ``m`` candidates."""
        return RuleSpec(self.family, self.k_for(m))

    @property
    def label(self):
        return f'{self.family}:{FULL_BORDA if self.k is None else self.k}'

    @property
    def symbol(self):
        letter = 'α' if self.family == RuleFamily.APPROVAL else 'β'
        return f'{letter}_{FULL_BORDA if self.k is None else self.k}'

    def __str__(self):
        return self.label


def parse_rule(text):
    match = RULE_PATTERN.match(text or '')
    if not match:
        raise RuleError(f'rule {text!r}: expected approval:<k>, borda:<k> or borda:m-1')
    family = match['family'].lower()
    raw_k = match['k'].lower()
    return RuleSpec(family, None if raw_k == FULL_BORDA else int(raw_k))


@dataclass(frozen=True)
class ScoringVector:
    """Points for positions 1..m, non-increasing and non-negative."""

    scores: tuple

    def __post_init__(self):
        scores = tuple(self.scores)
        object.__setattr__(self, 'scores', scores)
        if not scores or any(not isinstance(value, int) or value < 0 for value in scores):
            raise RuleError(f'scoring vector {list(scores)} must hold non-negative integers')
        if any(left < right for left, right in zip(scores, scores[1:])):
            raise RuleError(f'scoring vector {list(scores)} must be non-increasing')

    @property
    def m(self):
        return len(self.scores)

    def __getitem__(self, position):
        return self.scores[position]

    def __len__(self):
        return len(self.scores)

    def shifted(self, offset):
        return ScoringVector(tuple(value + offset for value in self.scores))


def scoring_vector(rule, m):
    k = rule.k_for(m)
    if rule.family == RuleFamily.APPROVAL:
        return ScoringVector((1,) * k + (0,) * (m - k))
    return ScoringVector(tuple(max(0, k - position) for position in range(m)))


def as_vector(rule_or_vector, m):
    if isinstance(rule_or_vector, ScoringVector):
        if rule_or_vector.m != m:
            raise RuleError(f'scoring vector has {rule_or_vector.m} positions, election has {m}')
        return rule_or_vector
    return scoring_vector(rule_or_vector, m)


def tally_ballots(ballots, m, vector, weights=None):
    """Scores as a list indexed by candidate; ``weights`` gives per-ballot multiplicities."""
    totals = [0] * m
    for index, ballot in enumerate(ballots):
        weight = 1 if weights is None else weights[index]
        for position, candidate in enumerate(ballot.ranking):
            totals[candidate] += weight * vector.scores[position]
    return totals


def tally(profile, rule_or_vector):
    """``ScoreTable``: candidate id to total score."""
    vector = as_vector(rule_or_vector, profile.m)
    return dict(enumerate(tally_ballots(profile.ballots, profile.m, vector)))


def top_candidate(totals):
    """Lowest id among the maximum scores."""
    best = max(totals)
    return totals.index(best)


def winner(profile, rule_or_vector):
    vector = as_vector(rule_or_vector, profile.m)
    return top_candidate(tally_ballots(profile.ballots, profile.m, vector))


def score_table_json(table):
    return {str(candidate): score for candidate, score in sorted(table.items())}
