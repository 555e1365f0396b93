"""
JSON documents for profiles.

Ordered form::

    {"m": 3, "ballots": [[1, 0, 2], [1, 0, 2]]}

Anonymous form::

    {"m": 3, "counts": [{"ballot": [1, 0, 2], "n": 2}]}
"""
import json
from pathlib import Path

from ballots.services.profiles import AnonymousProfile, Profile
from core.exceptions import DomainError, ProfileFormatError


def _require_int(value, field):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProfileFormatError(f'{field}: expected an integer, got {value!r}')
    return value


def _require_list(value, field):
    if not isinstance(value, list):
        raise ProfileFormatError(f'{field}: expected a list, got {type(value).__name__}')
    return value


def _ballot(value, field):
    return tuple(_require_int(item, f'{field}[{index}]') for index, item in enumerate(_require_list(value, field)))


def profile_from_json(document):
    """Build a ``Profile`` or ``AnonymousProfile`` from a decoded document."""
    if not isinstance(document, dict):
        raise ProfileFormatError('profile: expected a JSON object')
    if 'm' not in document:
        raise ProfileFormatError('m: missing')
    m = _require_int(document['m'], 'm')
    has_ballots, has_counts = 'ballots' in document, 'counts' in document
    if has_ballots == has_counts:
        raise ProfileFormatError('profile: exactly one of "ballots" or "counts" is required')
    try:
        if has_ballots:
            ballots = _require_list(document['ballots'], 'ballots')
            return Profile(
                m=m,
                ballots=tuple(_ballot(ballot, f'ballots[{index}]') for index, ballot in enumerate(ballots)),
            )
        pairs = []
        for index, entry in enumerate(_require_list(document['counts'], 'counts')):
            field = f'counts[{index}]'
            if not isinstance(entry, dict) or 'ballot' not in entry or 'n' not in entry:
                raise ProfileFormatError(f'{field}: expected {{"ballot": [...], "n": <int>}}')
            pairs.append((_ballot(entry['ballot'], f'{field}.ballot'), _require_int(entry['n'], f'{field}.n')))
        return AnonymousProfile(m=m, counts=tuple(pairs))
    except DomainError as exc:
        raise ProfileFormatError(f'{"ballots" if has_ballots else "counts"}: {exc}') from exc


def profile_to_json(profile):
    if isinstance(profile, AnonymousProfile):
        return {
            'm': profile.m,
            'counts': [{'ballot': ballot.to_list(), 'n': count} for ballot, count in profile.counts],
        }
    return {'m': profile.m, 'ballots': [ballot.to_list() for ballot in profile.ballots]}


def load_profile(path):
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise ProfileFormatError(f'profile: cannot read {path}: {exc.strerror or exc}') from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileFormatError(f'profile: invalid JSON at line {exc.lineno}: {exc.msg}') from exc
    return profile_from_json(document)
