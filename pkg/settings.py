import os
import sys
from pathlib import Path

from django.core.exceptions import ImproperlyConfigured


def env_bool(name, default=False):
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() in {'1', 'true', 'yes', 'on'}


def env_int(name, default):
    value = os.environ.get(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError as exc:
        raise ImproperlyConfigured(f'{name} must be an integer, got {value!r}') from exc


# Project root (directory containing this settings file)
BASE_DIR = Path(__file__).resolve().parent

IS_TEST = 'test' in sys.argv or os.environ.get('DJANGO_TEST_MODE') == '1'
DEBUG = env_bool('DJANGO_DEBUG', IS_TEST)

# No HTTP surface and no signed data; the key only satisfies Django's startup contract.
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'manipulability-cli-no-web-surface')

INSTALLED_APPS = [
    'core',        # observability, exceptions, parallel runner, report envelope
    'ballots',     # candidates, ballots, profiles, enumeration
    'scoring',     # k-approval / k-Borda scoring and winner
    'manipulation',  # normal-form and brute-force manipulability
    'ps_compare',  # exhaustive Pathak-Sonmez comparison
    'witnesses',   # counterexample constructions and claim verification
]

# 枚举与预算上限 / Enumeration ceilings and budgets
MANIP_MAX_CANDIDATES = env_int('MANIP_MAX_CANDIDATES', 8)
MANIP_PROFILE_BUDGET = env_int('MANIP_PROFILE_BUDGET', 10 ** 7)
MANIP_BRUTE_FORCE_MAX_M = env_int('MANIP_BRUTE_FORCE_MAX_M', 5)
MANIP_WORKERS = env_int('MANIP_WORKERS', 1)
MANIP_ANY_ORDER_RERUNS = env_int('MANIP_ANY_ORDER_RERUNS', 10)
MANIP_DEFAULT_SEED = env_int('MANIP_DEFAULT_SEED', 0)
MANIP_CACHE_TIMEOUT = env_int('MANIP_CACHE_TIMEOUT', 24 * 60 * 60)

CACHE_BACKEND = os.environ.get(
    'CACHE_BACKEND',
    'locmem' if (DEBUG or IS_TEST) else 'redis',
).lower()
if CACHE_BACKEND == 'redis':
    CACHES = {
        'default': {
            'BACKEND': 'django.core.cache.backends.redis.RedisCache',
            'LOCATION': os.environ.get(
                'CACHE_REDIS_URL',
                'redis://127.0.0.1:6379/2',
            ),
        },
    }
elif CACHE_BACKEND == 'locmem':
    CACHES = {
        'default': {
            'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
            'LOCATION': 'manipulability-local-cache',
        },
    }
elif CACHE_BACKEND == 'dummy':
    CACHES = {
        'default': {
            'BACKEND': 'django.core.cache.backends.dummy.DummyCache',
        },
    }
else:
    raise ImproperlyConfigured("CACHE_BACKEND must be 'redis', 'locmem' or 'dummy'")

LOG_FORMAT = os.environ.get('LOG_FORMAT', 'console')
LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING' if IS_TEST else 'INFO').upper()
SENTRY_DSN = os.environ.get('SENTRY_DSN', '')

# Reports go to stdout; every log line goes to stderr.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'filters': {
        'run_context': {'()': 'core.observability.RunContextFilter'},
    },
    'formatters': {
        'json': {'()': 'core.observability.JsonFormatter'},
        'console': {
            'format': '%(levelname)s %(name)s [%(run_id)s] %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'filters': ['run_context'],
            'formatter': LOG_FORMAT if LOG_FORMAT in {'json', 'console'} else 'console',
        },
    },
    'root': {'handlers': ['console'], 'level': LOG_LEVEL},
}

if SENTRY_DSN:
    try:
        import sentry_sdk
    except ImportError as exc:
        raise ImproperlyConfigured('SENTRY_DSN is set but sentry-sdk is not installed') from exc
    sentry_sdk.init(
        dsn=SENTRY_DSN,
        environment=os.environ.get('SENTRY_ENVIRONMENT', 'production'),
        release=os.environ.get('APP_RELEASE') or None,
        traces_sample_rate=float(os.environ.get('SENTRY_TRACES_SAMPLE_RATE', '0.0')),
        send_default_pii=False,
    )

USE_TZ = True
TIME_ZONE = 'UTC'
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# --- Celery Configuration ---
CELERY_BROKER_URL = os.environ.get('CELERY_BROKER_URL', 'redis://localhost:6379/0')
CELERY_RESULT_BACKEND = os.environ.get('CELERY_RESULT_BACKEND', 'redis://localhost:6379/0')
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_ALWAYS_EAGER = env_bool('CELERY_TASK_ALWAYS_EAGER', IS_TEST)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_TASK_ACKS_LATE = env_bool('CELERY_TASK_ACKS_LATE', True)
CELERY_WORKER_PREFETCH_MULTIPLIER = env_int('CELERY_WORKER_PREFETCH_MULTIPLIER', 1)
CELERY_TASK_SOFT_TIME_LIMIT = env_int('CELERY_TASK_SOFT_TIME_LIMIT', 3600)
CELERY_TASK_TIME_LIMIT = env_int('CELERY_TASK_TIME_LIMIT', 3900)
CELERY_TASK_DEFAULT_QUEUE = os.environ.get('CELERY_TASK_DEFAULT_QUEUE', 'default')
CELERY_TASK_ROUTES = {
    'ps_compare.tasks.compare_cell_task': {'queue': os.environ.get('CELERY_SWEEP_QUEUE', 'sweeps')},
}
CELERY_SWEEP_RESULT_TIMEOUT = env_int('CELERY_SWEEP_RESULT_TIMEOUT', 6 * 60 * 60)
