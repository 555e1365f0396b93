from django.core.checks import Error, Tags, register

from core.constants import ClaimId
from core.exceptions import ParameterError
from witnesses.services.catalogue import load_catalogue


@register(Tags.compatibility)
def claims_catalogue_checks(app_configs, **kwargs):
    try:
        catalogue = load_catalogue()
    except (OSError, ParameterError) as exc:
        return [Error(f'Claims catalogue cannot be loaded: {exc}', id='manip.E010')]
    missing = sorted(set(ClaimId.values) - set(catalogue))
    if missing:
        return [Error(
            f'Claims catalogue has no entry for {", ".join(missing)}.',
            id='manip.E011',
        )]
    return []
