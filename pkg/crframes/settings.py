"""
Django settings for crframes project.
"""

from pathlib import Path
from dotenv import load_dotenv
from decouple import config

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Security Settings
SECRET_KEY = config('SECRET_KEY', default='crframes-local-only-key')
DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'rest_framework',
    'jetalg',
    'exprdag',
    'vfield',
    'classes',
    'darboux',
    'oracle',
    'cli',
]

# Batch tool: no database, no URL routing
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework Configuration (serializers and the JSON renderer only)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': True,
}

# Engine Settings
CRFRAMES_THREADS = config('CRFRAMES_THREADS', default=1, cast=int)
CRFRAMES_POINTS = config('CRFRAMES_POINTS', default=20, cast=int)
CRFRAMES_SEED = config('CRFRAMES_SEED', default=7, cast=int)
CRFRAMES_RETRY_LIMIT = config('CRFRAMES_RETRY_LIMIT', default=1000, cast=int)
CRFRAMES_JET_HEIGHT = config('CRFRAMES_JET_HEIGHT', default=100, cast=int)
CRFRAMES_BASE_HEIGHT = config('CRFRAMES_BASE_HEIGHT', default=10, cast=int)
CRFRAMES_RANK_POINTS = config('CRFRAMES_RANK_POINTS', default=5, cast=int)
CRFRAMES_PARALLEL_THRESHOLD = config('CRFRAMES_PARALLEL_THRESHOLD', default=10_000, cast=int)
CRFRAMES_STRESS_MEM = config('CRFRAMES_STRESS_MEM', default=2 * 1024 ** 3, cast=int)
CRFRAMES_BYTES_PER_TERM = config('CRFRAMES_BYTES_PER_TERM', default=400, cast=int)
CRFRAMES_REPORT_TIMING = config('CRFRAMES_REPORT_TIMING', default=False, cast=bool)

# Logging
CRFRAMES_LOG_LEVEL = config('CRFRAMES_LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': CRFRAMES_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('jetalg', 'exprdag', 'vfield', 'classes', 'darboux', 'oracle', 'cli')
    },
}
