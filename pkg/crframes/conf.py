"""
Engine settings with fallbacks, so the algebra apps stay importable
outside a configured Django project.
"""

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    'CRFRAMES_THREADS': 1,
    'CRFRAMES_POINTS': 20,
    'CRFRAMES_SEED': 7,
    'CRFRAMES_RETRY_LIMIT': 1000,
    'CRFRAMES_JET_HEIGHT': 100,
    'CRFRAMES_BASE_HEIGHT': 10,
    'CRFRAMES_RANK_POINTS': 5,
    'CRFRAMES_PARALLEL_THRESHOLD': 10_000,
    'CRFRAMES_STRESS_MEM': 2 * 1024 ** 3,
    'CRFRAMES_BYTES_PER_TERM': 400,
    'CRFRAMES_REPORT_TIMING': False,
}


def setting(name):
    try:
        return getattr(settings, name)
    except (ImproperlyConfigured, AttributeError):
        return DEFAULTS[name]
