"""
Single-voter manipulability of scoring rules under lexicographic tie-breaking.

The fast path builds one canonical misreport per voter (the normal-form
vote): candidates the voter prefers to the sincere winner come first, the
strongest rival first; the remaining candidates follow in reverse, so the
strongest of them lands last. If that ballot does not elect a candidate the
voter prefers, no ballot does. ``brute_force_manipulation`` tries every
ballot and exists only to check that claim.
"""
import logging
from dataclasses import dataclass

from ballots.services.enumeration import enumerate_orders
from ballots.services.profiles import AnonymousProfile, LinearOrder, as_order
from scoring.services.rules import as_vector, tally_ballots, top_candidate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ManipulationWitness:
    voter: int
    misreport: LinearOrder
    sincere_winner: int
    new_winner: int

    def to_json(self):
        return {
            'voter': self.voter,
            'misreport': self.misreport.to_list(),
            'sincere_winner': self.sincere_winner,
            'new_winner': self.new_winner,
        }

    def certifies(self, profile, rule):
        """Replay the misreport; true iff it elects ``new_winner`` and the voter gains."""
        vector = as_vector(rule, profile.m)
        sincere = profile.ballots[self.voter]
        honest = top_candidate(tally_ballots(profile.ballots, profile.m, vector))
        replayed = top_candidate(
            tally_ballots(profile.replace(self.voter, self.misreport).ballots, profile.m, vector)
        )
        return (
            honest == self.sincere_winner
            and replayed == self.new_winner
            and sincere.prefers(self.new_winner, self.sincere_winner)
        )


@dataclass(frozen=True)
class GoodBadPartition:
    """
    Candidates split around the sincere winner.

    ``good`` holds those the voter strictly prefers to the winner, ``bad``
    the rest (winner included). Each side is sorted by descending score among
    the other voters, ties by ascending id.
    """

    good: tuple
    bad: tuple

    def vote(self):
        return LinearOrder(self.good + self.bad[::-1])


def _others(totals, ballot, vector):
    others = list(totals)
    for position, candidate in enumerate(ballot.ranking):
        others[candidate] -= vector.scores[position]
    return others


def _partition(ballot, others, sincere_winner):
    def strength(candidate):
        return (-others[candidate], candidate)

    good = sorted(ballot.better_than(sincere_winner), key=strength)
    good_set = set(good)
    bad = sorted((c for c in range(len(others)) if c not in good_set), key=strength)
    return GoodBadPartition(good=tuple(good), bad=tuple(bad))


def _elected(others, ranking, vector):
    totals = list(others)
    for position, candidate in enumerate(ranking):
        totals[candidate] += vector.scores[position]
    return top_candidate(totals)


def _voter_witness(voter, ballot, totals, vector):
    sincere_winner = top_candidate(totals)
    if ballot.ranking[0] == sincere_winner:
        return None
    others = _others(totals, ballot, vector)
    vote = _partition(ballot, others, sincere_winner).vote()
    new_winner = _elected(others, vote.ranking, vector)
    if ballot.prefers(new_winner, sincere_winner):
        return ManipulationWitness(voter, vote, sincere_winner, new_winner)
    return None


def good_bad_partition(voter, profile, rule):
    vector = as_vector(rule, profile.m)
    totals = tally_ballots(profile.ballots, profile.m, vector)
    ballot = profile.ballots[voter]
    return _partition(ballot, _others(totals, ballot, vector), top_candidate(totals))


def normal_form_vote(voter, profile, rule):
    return good_bad_partition(voter, profile, rule).vote()


def manipulable_by(voter, profile, rule):
    vector = as_vector(rule, profile.m)
    totals = tally_ballots(profile.ballots, profile.m, vector)
    return _voter_witness(voter, profile.ballots[voter], totals, vector)


def find_manipulation(profile, rule):
    """First witness over voters in index order, or ``None``."""
    vector = as_vector(rule, profile.m)
    totals = tally_ballots(profile.ballots, profile.m, vector)
    checked = set()
    for voter, ballot in enumerate(profile.ballots):
        # Voters with identical ballots share the same answer.
        if ballot in checked:
            continue
        checked.add(ballot)
        witness = _voter_witness(voter, ballot, totals, vector)
        if witness is not None:
            return witness
    return None


def anonymous_manipulation(anonymous, rule):
    """``find_manipulation`` on ``expand(anonymous)`` without expanding it."""
    vector = as_vector(rule, anonymous.m)
    ballots = [ballot for ballot, _ in anonymous.counts]
    totals = tally_ballots(ballots, anonymous.m, vector, [count for _, count in anonymous.counts])
    voter = 0
    for ballot, count in anonymous.counts:
        witness = _voter_witness(voter, ballot, totals, vector)
        if witness is not None:
            return witness
        voter += count
    return None


def is_manipulable(profile, rule):
    if isinstance(profile, AnonymousProfile):
        return anonymous_manipulation(profile, rule) is not None
    return find_manipulation(profile, rule) is not None


def brute_force_manipulation(profile, rule):
    """
    Try every ballot for every voter.

    Voters go in index order and misreports in lexicographic order; the first
    strictly improving misreport is returned.
    """
    vector = as_vector(rule, profile.m)
    misreports = enumerate_orders(profile.m)
    totals = tally_ballots(profile.ballots, profile.m, vector)
    sincere_winner = top_candidate(totals)
    for voter, ballot in enumerate(profile.ballots):
        if ballot.ranking[0] == sincere_winner:
            continue
        others = _others(totals, ballot, vector)
        for misreport in misreports:
            new_winner = _elected(others, misreport.ranking, vector)
            if ballot.prefers(new_winner, sincere_winner):
                return ManipulationWitness(voter, misreport, sincere_winner, new_winner)
    return None


def voter_report(voter, profile, rule):
    """Everything the normal-form decision looked at for one voter."""
    vector = as_vector(rule, profile.m)
    totals = tally_ballots(profile.ballots, profile.m, vector)
    ballot = as_order(profile.ballots[voter])
    others = _others(totals, ballot, vector)
    partition = _partition(ballot, others, top_candidate(totals))
    witness = _voter_witness(voter, ballot, totals, vector)
    return {
        'voter': voter,
        'good': list(partition.good),
        'bad': list(partition.bad),
        'normal_form_vote': partition.vote().to_list(),
        'scores_without_voter': {str(c): score for c, score in enumerate(others)},
        'witness': witness.to_json() if witness else None,
    }
