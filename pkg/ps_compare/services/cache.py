"""
Comparison reports in the Django cache.

A report is a pure function of its rules, ``(n, m)`` and scan mode, so the
JSON form is cached under a tracked group that ``compare --refresh`` drops.
"""
from django.conf import settings
from django.core.cache import cache

from core import __version__

REGISTRY_PREFIX = 'manipulability:cache_key_registry'
REGISTRY_TIMEOUT = 7 * 24 * 60 * 60
COMPARISON_GROUP = 'comparisons'


def _registry_key(group):
    return f'{REGISTRY_PREFIX}:{group}'


def cache_set_tracked(key, value, timeout, *groups):
    cache.set(key, value, timeout)
    for group in groups:
        registry_key = _registry_key(group)
        keys = list(cache.get(registry_key, ()))
        if key not in keys:
            keys.append(key)
            cache.set(registry_key, keys, REGISTRY_TIMEOUT)


def invalidate_cache_group(group):
    registry_key = _registry_key(group)
    keys = cache.get(registry_key, ())
    if keys:
        cache.delete_many(keys)
    cache.delete(registry_key)


def comparison_key(f, g, n, m, anonymize, fast):
    mode = 'anonymous' if anonymize else 'ordered'
    return f'manipulability:{__version__}:compare:{f.label}:{g.label}:{n}:{m}:{mode}:{"fast" if fast else "full"}'


def cached_comparison(f, g, n, m, compute, anonymize=True, fast=False, use_cache=True):
    """``compute()`` must return the report JSON; it only runs on a miss."""
    if not use_cache:
        return compute()
    key = comparison_key(f, g, n, m, anonymize, fast)
    payload = cache.get(key)
    if payload is None:
        payload = compute()
        cache_set_tracked(key, payload, settings.MANIP_CACHE_TIMEOUT, COMPARISON_GROUP)
    return payload


def invalidate_comparisons():
    invalidate_cache_group(COMPARISON_GROUP)
