from celery import shared_task
from django.conf import settings

from ps_compare.services.sweep import SweepCell, compute_cell

DEFAULT_TASK_KWARGS = {
    'acks_late': True,
    'reject_on_worker_lost': True,
    'soft_time_limit': getattr(settings, 'CELERY_TASK_SOFT_TIME_LIMIT', 3600),
    'time_limit': getattr(settings, 'CELERY_TASK_TIME_LIMIT', 3900),
}


@shared_task(**DEFAULT_TASK_KWARGS)
def compare_cell_task(cell):
    """Compute one sweep row; ``cell`` is ``SweepCell.to_json()``."""
    return compute_cell(SweepCell(**cell))
