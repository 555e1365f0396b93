from django.conf import settings
from django.core.checks import Error, Tags, Warning, register

HARD_CANDIDATE_CEILING = 10


@register(Tags.compatibility)
def enumeration_limits_checks(app_configs, **kwargs):
    issues = []
    if not 1 <= settings.MANIP_MAX_CANDIDATES <= HARD_CANDIDATE_CEILING:
        issues.append(Error(
            f'MANIP_MAX_CANDIDATES must lie in [1, {HARD_CANDIDATE_CEILING}]; '
            f'{HARD_CANDIDATE_CEILING}! ballots is the largest space the enumerators accept.',
            id='manip.E001',
        ))
    if settings.MANIP_PROFILE_BUDGET <= 0:
        issues.append(Error(
            'MANIP_PROFILE_BUDGET must be positive.',
            id='manip.E002',
        ))
    if settings.MANIP_WORKERS <= 0:
        issues.append(Error(
            'MANIP_WORKERS must be positive.',
            id='manip.E003',
        ))
    if settings.MANIP_BRUTE_FORCE_MAX_M > settings.MANIP_MAX_CANDIDATES:
        issues.append(Warning(
            'MANIP_BRUTE_FORCE_MAX_M exceeds MANIP_MAX_CANDIDATES; brute-force '
            'cross-validation will be refused above the enumeration ceiling.',
            id='manip.W001',
        ))
    return issues
