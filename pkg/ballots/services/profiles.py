"""
Ballots and profiles.

A candidate is a plain ``int``; its value is also its tie-breaking priority,
so candidate 0 wins every tie it takes part in.
"""
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

from core.exceptions import DomainError


@dataclass(frozen=True, order=True)
class LinearOrder:
    """A ballot: candidate ids from most to least preferred."""

    ranking: tuple

    def __post_init__(self):
        ranking = tuple(self.ranking)
        object.__setattr__(self, 'ranking', ranking)
        if sorted(ranking) != list(range(len(ranking))):
            raise DomainError(
                f'ballot {list(ranking)} is not a permutation of 0..{len(ranking) - 1}'
            )

    def __iter__(self):
        return iter(self.ranking)

    def __len__(self):
        return len(self.ranking)

    def __getitem__(self, index):
        return self.ranking[index]

    @property
    def m(self):
        return len(self.ranking)

    @cached_property
    def positions(self):
        """``positions[c]`` is the 0-based rank of candidate ``c``."""
        table = [0] * len(self.ranking)
        for position, candidate in enumerate(self.ranking):
            table[candidate] = position
        return tuple(table)

    def position(self, candidate):
        return self.positions[candidate]

    def prefers(self, a, b):
        return self.positions[a] < self.positions[b]

    def better_than(self, candidate):
        """Candidates strictly preferred to ``candidate``, best first."""
        return self.ranking[:self.positions[candidate]]

    def to_list(self):
        return list(self.ranking)


def as_order(ballot):
    return ballot if isinstance(ballot, LinearOrder) else LinearOrder(ballot)


@dataclass(frozen=True)
class Profile:
    """An ordered tuple of ``n`` ballots over ``m`` candidates."""

    m: int
    ballots: tuple

    def __post_init__(self):
        ballots = tuple(as_order(ballot) for ballot in self.ballots)
        object.__setattr__(self, 'ballots', ballots)
        if not ballots:
            raise DomainError('a profile needs at least one ballot')
        for index, ballot in enumerate(ballots):
            if ballot.m != self.m:
                raise DomainError(f'ballot {index} ranks {ballot.m} candidates, expected {self.m}')

    @classmethod
    def of(cls, *rankings):
        if not rankings:
            raise DomainError('a profile needs at least one ballot')
        return cls(m=len(rankings[0]), ballots=tuple(rankings))

    @property
    def n(self):
        return len(self.ballots)

    def __iter__(self):
        return iter(self.ballots)

    def __len__(self):
        return len(self.ballots)

    def without(self, voter):
        """The other voters' ballots (``P_{-i}``)."""
        return self.ballots[:voter] + self.ballots[voter + 1:]

    def replace(self, voter, ballot):
        ballots = list(self.ballots)
        ballots[voter] = as_order(ballot)
        return Profile(m=self.m, ballots=tuple(ballots))

    def permuted(self, voter_order):
        return Profile(m=self.m, ballots=tuple(self.ballots[index] for index in voter_order))


@dataclass(frozen=True)
class AnonymousProfile:
    """A multiset of ballots, kept as ``(ballot, count)`` pairs in lexicographic ballot order."""

    m: int
    counts: tuple

    def __post_init__(self):
        pairs = self.counts.items() if isinstance(self.counts, Mapping) else self.counts
        merged = Counter()
        for ballot, count in pairs:
            if not isinstance(count, int) or count < 1:
                raise DomainError(f'multiplicity of ballot {list(ballot)} must be a positive integer')
            order = as_order(ballot)
            if order.m != self.m:
                raise DomainError(f'ballot {order.to_list()} ranks {order.m} candidates, expected {self.m}')
            merged[order] += count
        if not merged:
            raise DomainError('an anonymous profile needs at least one ballot')
        object.__setattr__(self, 'counts', tuple(sorted(merged.items())))

    @property
    def n(self):
        return sum(count for _, count in self.counts)

    def as_dict(self):
        return dict(self.counts)


def anonymize(profile):
    return AnonymousProfile(m=profile.m, counts=Counter(profile.ballots))


def expand(anonymous):
    """Ballots in canonical (lexicographic) order, each repeated by its multiplicity."""
    ballots = []
    for ballot, count in anonymous.counts:
        ballots.extend([ballot] * count)
    return Profile(m=anonymous.m, ballots=tuple(ballots))


def as_profile(profile):
    """Ordered view of either profile kind."""
    return expand(profile) if isinstance(profile, AnonymousProfile) else profile
