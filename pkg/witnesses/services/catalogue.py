from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import yaml

from core.constants import ClaimId
from core.exceptions import ParameterError

CATALOGUE_PATH = Path(__file__).resolve().parent.parent / 'data' / 'claims.yaml'

CONSTRUCTION = 'construction'
COMPOSITE = 'composite'
EXHAUSTIVE = 'exhaustive'
KINDS = (CONSTRUCTION, COMPOSITE, EXHAUSTIVE)


@dataclass(frozen=True)
class ClaimEntry:
    id: str
    kind: str
    title: str
    manipulated: str = ''
    robust: str = ''
    preconditions: tuple = ()
    composes: tuple = ()
    grid: dict = field(default_factory=dict)


def _entry(raw):
    try:
        claim = ClaimId(raw['id']).value
    except (KeyError, ValueError) as exc:
        raise ParameterError(f'claims catalogue: unknown claim id {raw.get("id")!r}') from exc
    if raw.get('kind') not in KINDS:
        raise ParameterError(f'claims catalogue: {claim} has kind {raw.get("kind")!r}')
    return ClaimEntry(
        id=claim,
        kind=raw['kind'],
        title=raw.get('title', ''),
        manipulated=raw.get('manipulated', ''),
        robust=raw.get('robust', ''),
        preconditions=tuple(raw.get('preconditions', ())),
        composes=tuple(ClaimId(item).value for item in raw.get('composes', ())),
        grid={key: str(value) for key, value in (raw.get('grid') or {}).items()},
    )


@lru_cache(maxsize=4)
def load_catalogue(path=CATALOGUE_PATH):
    with open(path, encoding='utf-8') as handle:
        data = yaml.safe_load(handle) or {}
    entries = [_entry(raw) for raw in data.get('claims', [])]
    return {entry.id: entry for entry in entries}


def claim_entry(claim):
    try:
        claim = ClaimId(claim).value
    except ValueError as exc:
        raise ParameterError(f'claim: {claim!r} is not one of {", ".join(ClaimId.values)}') from exc
    entry = load_catalogue().get(claim)
    if entry is None:
        raise ParameterError(f'claim: {claim} is missing from the claims catalogue')
    return entry
