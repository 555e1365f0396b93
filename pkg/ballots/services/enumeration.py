import logging
import random
from functools import lru_cache
from itertools import combinations_with_replacement, groupby, islice, permutations, product
from math import comb, factorial

from django.conf import settings

from ballots.services.profiles import AnonymousProfile, LinearOrder, Profile
from core.exceptions import BudgetExceeded, DomainError

logger = logging.getLogger(__name__)


def candidate_ceiling(ceiling=None):
    return ceiling if ceiling is not None else settings.MANIP_MAX_CANDIDATES


def check_candidate_count(m, ceiling=None):
    ceiling = candidate_ceiling(ceiling)
    if not isinstance(m, int) or not 1 <= m <= ceiling:
        raise DomainError(f'm={m} is outside the supported range [1, {ceiling}]')
    return m


def check_voter_count(n):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f'n={n} must be a positive integer')
    return n


@lru_cache(maxsize=None)
def _orders(m):
    # itertools.permutations emits lexicographic order for a sorted input.
    return tuple(LinearOrder(ranking) for ranking in permutations(range(m)))


def enumerate_orders(m, ceiling=None):
    """All ``m!`` ballots, lexicographic by ranking."""
    check_candidate_count(m, ceiling)
    return _orders(m)


def count_anonymous_profiles(n, m):
    return comb(factorial(m) + n - 1, n)


def count_profiles(n, m):
    return factorial(m) ** n


def _check_budget(count, budget):
    if budget is not None and count > budget:
        raise BudgetExceeded(count, budget)


def enumerate_anonymous_profiles(n, m, budget=None, start=0, stop=None, ceiling=None):
    """
    Every multiset of ``n`` ballots over ``m`` candidates, exactly once.

    Canonical order is lexicographic over the sorted ballot-index tuples, so
    ``[start, stop)`` slices partition the space reproducibly. The budget is
    checked here, before the generator exists.
    """
    check_voter_count(n)
    orders = enumerate_orders(m, ceiling)
    _check_budget(count_anonymous_profiles(n, m), budget)
    return _anonymous_profiles(orders, n, m, start, stop)


def _anonymous_profiles(orders, n, m, start, stop):
    indices = islice(combinations_with_replacement(range(len(orders)), n), start, stop)
    for combination in indices:
        yield AnonymousProfile(
            m=m,
            counts=tuple((orders[index], len(list(group))) for index, group in groupby(combination)),
        )


def enumerate_profiles(n, m, budget=None, start=0, stop=None, ceiling=None):
    """Every ordered profile (``(m!)^n`` of them); the unreduced scan space."""
    check_voter_count(n)
    orders = enumerate_orders(m, ceiling)
    _check_budget(count_profiles(n, m), budget)
    return _profiles(orders, n, m, start, stop)


def _profiles(orders, n, m, start, stop):
    for ballots in islice(product(orders, repeat=n), start, stop):
        yield Profile(m=m, ballots=ballots)


def random_order(m, rng):
    ranking = list(range(m))
    rng.shuffle(ranking)
    return LinearOrder(tuple(ranking))


def random_profile(n, m, rng=None):
    rng = rng or random.Random()
    return Profile(m=m, ballots=tuple(random_order(m, rng) for _ in range(n)))
