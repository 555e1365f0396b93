"""
Profile families that separate two rules.

Each constructor lays out letter groups (A, B, C, ...) and builds ballots as
concatenations of index ranges over them. Ids are handed out alphabetically,
then by subscript, so the group listed first wins every tie against later
ones. An index range whose upper end falls below its lower end is an empty
block.
"""
import random
from dataclasses import dataclass, field, replace

from ballots.services.profiles import LinearOrder, Profile
from core.constants import ClaimId
from core.exceptions import ParameterError
from scoring.services.rules import RuleSpec


class Candidates:
    """Letter groups mapped to consecutive ids."""

    def __init__(self, *groups):
        self._ids = {}
        next_id = 0
        for letter, size in groups:
            for subscript in range(1, size + 1):
                self._ids[letter, subscript] = next_id
                next_id += 1
        self.m = next_id

    def __call__(self, letter, subscript=1):
        return self._ids[letter, subscript]

    def up(self, letter, first, last):
        return [self._ids[letter, s] for s in range(first, last + 1)]

    def down(self, letter, first, last):
        return [self._ids[letter, s] for s in range(first, last - 1, -1)]


def ballot(*blocks):
    ranking = []
    for block in blocks:
        ranking.extend([block] if isinstance(block, int) else block)
    return LinearOrder(tuple(ranking))


def repeat(count, order):
    return [order] * count


@dataclass(frozen=True)
class WitnessCase:
    """A profile where ``manip_rule`` is manipulable and ``robust_rule`` is not."""

    claim: str
    params: dict
    profile: Profile
    manip_rule: RuleSpec
    robust_rule: RuleSpec
    # Re-orderings of "any order" blocks that must verify as well.
    variants: tuple = field(default=())

    def swapped(self):
        return replace(self, manip_rule=self.robust_rule, robust_rule=self.manip_rule)

    def label(self):
        return ' '.join(f'{key}={value}' for key, value in self.params.items())


def _require(condition, message):
    if not condition:
        raise ParameterError(message)


def _require_rule_pair(m, i, j):
    _require(m >= 3, f'm={m} must be at least 3')
    _require(1 <= i, f'i={i} must be at least 1')
    _require(i < j, f'i={i} must be smaller than j={j}')
    _require(j <= m - 1, f'j={j} must be at most m-1={m - 1}')


def _profile(m, ballots):
    return Profile(m=m, ballots=tuple(ballots))


def approval_i_not_geq_j(n, m, i, j):
    _require_rule_pair(m, i, j)
    _require(n >= 2, f'n={n} must be at least 2')
    c = Candidates(('A', j - i), ('B', i), ('C', m - j))
    ballots = (
        repeat(n - 1, ballot(c.up('B', 1, i), c.up('A', 1, j - i), c.up('C', 1, m - j)))
        + [ballot(c.up('B', 1, i), c.down('A', j - i, 1), c.up('C', 1, m - j))]
    )
    return _profile(m, ballots), RuleSpec.approval(j), RuleSpec.approval(i)


def approval_j_not_geq_i_even(n, m, i, j):
    _require_rule_pair(m, i, j)
    _require(n >= 2 and n % 2 == 0, f'n={n} must be even and at least 2')
    _require(m >= 2 * j - 1, f'm={m} must be at least 2j-1={2 * j - 1}')
    q = n // 2
    c = Candidates(('A', 1), ('B', j - 1), ('C', j - 1), ('D', m - 2 * j + 1))
    b, cs, d = c.up('B', 1, j - 1), c.up('C', 1, j - 1), c.up('D', 1, m - 2 * j + 1)
    ballots = (
        repeat(q, ballot(b, c('A'), cs, d))
        + repeat(q - 1, ballot(c('A'), cs, b, d))
        + [ballot(cs, c('A'), b, d)]
    )
    return _profile(m, ballots), RuleSpec.approval(i), RuleSpec.approval(j)


def approval_j_not_geq_i_odd(n, m, i, j):
    _require_rule_pair(m, i, j)
    _require(n >= 3 and n % 2 == 1, f'n={n} must be odd and at least 3')
    _require(m >= 2 * j - 1, f'm={m} must be at least 2j-1={2 * j - 1}')
    _require(i >= 2, f'i={i} must be at least 2')
    q = n // 2
    c = Candidates(('A', j - 1), ('B', j), ('C', m - 2 * j + 1))
    a, cs = c.up('A', 1, j - 1), c.up('C', 1, m - 2 * j + 1)
    ballots = (
        repeat(q, ballot(c.up('A', 1, i), c('B', 1), c.up('A', i + 1, j - 1), c.up('B', 2, j), cs))
        + repeat(q, ballot(c.down('B', i, 1), c.up('B', i + 1, j), a, cs))
        + [ballot(c.up('B', 1, j), a, cs)]
    )
    return _profile(m, ballots), RuleSpec.approval(i), RuleSpec.approval(j)


def approval_j_not_geq_1(n, m, j, i=1):
    _require(i == 1, f'i={i} must be 1')
    _require_rule_pair(m, 1, j)
    _require(n >= 2, f'n={n} must be at least 2')
    q = n // 2
    c = Candidates(('A', 1), ('B', 1), ('C', 1), ('D', m - 3))
    head, tail = c.up('D', 1, j - 2), c.up('D', j - 1, m - 3)
    A, B, C = c('A'), c('B'), c('C')
    if n % 2 == 0:
        ballots = (
            repeat(q, ballot(B, A, head, C, tail))
            + repeat(q - 1, ballot(A, B, head, C, tail))
            + [ballot(C, A, head, B, tail)]
        )
    else:
        ballots = (
            repeat(q, ballot(B, C, head, A, tail))
            + repeat(q, ballot(A, B, head, C, tail))
            + [ballot(C, B, head, A, tail)]
        )
    return _profile(m, ballots), RuleSpec.approval(1), RuleSpec.approval(j)


def approval_j_not_geq_i_smallm(n, m, i, j, any_order=None):
    """
    Two layouts: ``m >= i + j`` and ``m < i + j``.

    The second one leaves the tail of the first ``n - 1`` ballots in any
    order; ``any_order`` permutes that tail (ascending ids by default).
    """
    _require_rule_pair(m, i, j)
    _require(m < 2 * j, f'm={m} must be smaller than 2j={2 * j}')
    _require(i >= 2, f'i={i} must be at least 2')
    _require(n >= 2, f'n={n} must be at least 2')
    if m >= i + j:
        c = Candidates(('A', 2 * i), ('B', j - i), ('C', m - i - j))
        b, cs = c.up('B', 1, j - i), c.up('C', 1, m - i - j)
        ballots = (
            repeat(n // 2, ballot(c.up('A', 1, i), b, c.down('A', 2 * i, i + 1), cs))
            + repeat(n - n // 2, ballot(c.up('A', i + 1, 2 * i), b, c.down('A', i, 1), cs))
        )
        return _profile(m, ballots), RuleSpec.approval(i), RuleSpec.approval(j)
    _require(m >= 2 * i, f'm={m} must be at least 2i={2 * i} when m < i+j')
    lead = i - (m - j)
    c = Candidates(('A', m - j), ('B', j - i), ('C', i))
    rest = c.up('B', lead + 1, j - i) + c.up('C', 1, i)
    if any_order is not None:
        rest = any_order(rest)
    ballots = (
        repeat(n - 1, ballot(c.up('B', 1, lead), c.up('A', 1, m - j), rest))
        + [ballot(c.up('C', 1, i), c.up('B', 1, j - i), c.up('A', 1, m - j))]
    )
    return _profile(m, ballots), RuleSpec.approval(i), RuleSpec.approval(j)


def _borda_candidates(m):
    return Candidates(('A', 1), ('B', 1), ('C', m - 2))


def borda_i_not_geq_j_even(n, m, i, j):
    _require_rule_pair(m, i, j)
    _require(n >= 2 and n % 2 == 0, f'n={n} must be even and at least 2')
    q = n // 2
    c = _borda_candidates(m)
    A, B = c('A'), c('B')
    ballots = (
        [ballot(A, c.up('C', 1, j - 2), B, c.up('C', j - 1, m - 2))]
        + [ballot(B, A, c.down('C', m - 2, 1))]
        + repeat(q - 1, ballot(A, c.up('C', 1, m - 2), B))
        + repeat(q - 1, ballot(B, c.down('C', m - 2, 1), A))
    )
    return _profile(m, ballots), RuleSpec.borda(j), RuleSpec.borda(i)


def borda_i_not_geq_j_odd(n, m, i, j):
    _require_rule_pair(m, i, j)
    _require(n >= 3 and n % 2 == 1, f'n={n} must be odd and at least 3')
    q = n // 2
    c = _borda_candidates(m)
    A, B = c('A'), c('B')
    ballots = (
        [ballot(B, c.up('C', 1, j - 2), A, c.up('C', j - 1, m - 2))]
        + repeat(q, ballot(B, A, c.up('C', 1, m - 2)))
        + repeat(q, ballot(A, B, c.down('C', m - 2, 1)))
    )
    return _profile(m, ballots), RuleSpec.borda(j), RuleSpec.borda(i)


def borda_j_not_geq_i_odd(n, m, i, j):
    _require_rule_pair(m, i, j)
    _require(n >= 3 and n % 2 == 1, f'n={n} must be odd and at least 3')
    q = n // 2
    c = _borda_candidates(m)
    A, B = c('A'), c('B')
    ballots = (
        repeat(q, ballot(A, B, c.down('C', m - 2, 1)))
        + repeat(q - 1, ballot(B, A, c.up('C', 1, m - 2)))
        + [ballot(B, c.up('C', 1, m - 2), A)]
        + [ballot(c.up('C', 1, i), B, c.up('C', i + 1, m - 2), A)]
    )
    return _profile(m, ballots), RuleSpec.borda(i), RuleSpec.borda(j)


def borda_j_not_geq_i_even(n, m, i, j):
    _require_rule_pair(m, i, j)
    _require(n % 2 == 0 and n > 4, f'n={n} must be even with n/2 > 2')
    q = n // 2
    c = _borda_candidates(m)
    A, B = c('A'), c('B')
    ballots = (
        repeat(q - 1, ballot(A, B, c.down('C', m - 2, 1)))
        + repeat(q - 2, ballot(B, A, c.up('C', 1, m - 2)))
        + [ballot(B, c.up('C', 1, m - 2), A)]
        + [ballot(c.up('C', 1, i), B, c.up('C', i + 1, m - 2), A)]
        + [ballot(c.down('C', m - 2, m - i - 1), B, c.down('C', m - i - 2, 1), A)]
    )
    return _profile(m, ballots), RuleSpec.borda(i), RuleSpec.borda(j)


def borda_j_not_geq_i_n4(n, m, i, j):
    _require_rule_pair(m, i, j)
    _require(n == 4, f'n={n} must be 4')
    c = _borda_candidates(m)
    A, B = c('A'), c('B')
    if i > 1:
        ballots = (
            repeat(2, ballot(B, c.down('C', m - 2, 1), A))
            + [ballot(A, B, c.up('C', 1, m - 2))]
            + [ballot(A, c.up('C', 1, j - 2), B, c.up('C', j - 1, m - 2))]
        )
    else:
        ballots = (
            repeat(2, ballot(B, A, c.down('C', m - 2, 1)))
            + [ballot(A, c.up('C', 1, m - 2), B)]
            + [ballot(c('C', 1), A, c.up('C', 2, m - 2), B)]
        )
    return _profile(m, ballots), RuleSpec.borda(i), RuleSpec.borda(j)


def borda_full_not_geq_k(n, m, k):
    _require(m >= 3, f'm={m} must be at least 3')
    _require(1 <= k <= m - 2, f'k={k} must lie in [1, m-2={m - 2}]')
    _require(n == 2, f'n={n} must be 2')
    c = Candidates(('A', m - 2), ('B', 1), ('C', 1))
    a = c.up('A', 1, m - 2)
    ballots = [ballot(c('B'), c('C'), a), ballot(c('C'), a, c('B'))]
    return _profile(m, ballots), RuleSpec.borda(k), RuleSpec.borda(m - 1)


@dataclass(frozen=True)
class Construction:
    build: object
    params: tuple
    # Whether the layout has an "any order" block to re-run under shuffles.
    any_order: bool = False


CONSTRUCTIONS = {
    ClaimId.APPROVAL_I_NOT_GEQ_J: Construction(approval_i_not_geq_j, ('n', 'm', 'i', 'j')),
    ClaimId.APPROVAL_J_NOT_GEQ_I_EVEN: Construction(approval_j_not_geq_i_even, ('n', 'm', 'i', 'j')),
    ClaimId.APPROVAL_J_NOT_GEQ_I_ODD: Construction(approval_j_not_geq_i_odd, ('n', 'm', 'i', 'j')),
    ClaimId.APPROVAL_J_NOT_GEQ_1: Construction(approval_j_not_geq_1, ('n', 'm', 'j')),
    ClaimId.APPROVAL_J_NOT_GEQ_I_SMALLM: Construction(
        approval_j_not_geq_i_smallm, ('n', 'm', 'i', 'j'), any_order=True,
    ),
    ClaimId.BORDA_I_NOT_GEQ_J_EVEN: Construction(borda_i_not_geq_j_even, ('n', 'm', 'i', 'j')),
    ClaimId.BORDA_I_NOT_GEQ_J_ODD: Construction(borda_i_not_geq_j_odd, ('n', 'm', 'i', 'j')),
    ClaimId.BORDA_J_NOT_GEQ_I_ODD: Construction(borda_j_not_geq_i_odd, ('n', 'm', 'i', 'j')),
    ClaimId.BORDA_J_NOT_GEQ_I_EVEN: Construction(borda_j_not_geq_i_even, ('n', 'm', 'i', 'j')),
    ClaimId.BORDA_J_NOT_GEQ_I_N4: Construction(borda_j_not_geq_i_n4, ('n', 'm', 'i', 'j')),
    ClaimId.BORDA_FULL_NOT_GEQ_K: Construction(borda_full_not_geq_k, ('n', 'm', 'k')),
}


def construction_for(claim):
    try:
        return CONSTRUCTIONS[ClaimId(claim)]
    except (ValueError, KeyError) as exc:
        raise ParameterError(f'claim: {claim!r} has no profile construction') from exc


def _shuffler(seed):
    rng = random.Random(seed)

    def shuffle(block):
        block = list(block)
        rng.shuffle(block)
        return block

    return shuffle


def build_witness(claim, params, seed=0, reruns=0):
    """
    Build the ``WitnessCase`` of ``claim`` at ``params`` (a mapping).

    Layouts with an "any order" block also get ``reruns`` variants whose
    block is shuffled by a ``random.Random`` seeded from ``seed``.
    """
    construction = construction_for(claim)
    missing = [name for name in construction.params if name not in params]
    if missing:
        raise ParameterError(f'{claim}: missing parameter(s) {", ".join(missing)}')
    values = {name: params[name] for name in construction.params}
    profile, manip_rule, robust_rule = construction.build(**values)
    variants = ()
    if construction.any_order and reruns:
        variants = tuple(
            construction.build(**values, any_order=_shuffler(seed + offset))[0]
            for offset in range(reruns)
        )
    return WitnessCase(
        claim=ClaimId(claim).value,
        params=values,
        profile=profile,
        manip_rule=manip_rule,
        robust_rule=robust_rule,
        variants=variants,
    )
