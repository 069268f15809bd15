"""
Django settings for the binzeros project.

The project has no database and no web surface: Django supplies the
settings layer, the app registry and the management-command runner, and
Django REST framework supplies serializers and the JSON renderer.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from an optional .env next to manage.py
load_dotenv(BASE_DIR / '.env')

SECRET_KEY = os.getenv('SECRET_KEY', 'default-insecure-key-for-dev')

DEBUG = os.getenv('DEBUG', '0') == '1'


# Application definition

INSTALLED_APPS = [
    # Third-party apps
    'rest_framework',

    # Local apps
    'sections',
]

# Nothing is persisted
DATABASES = {}

USE_I18N = False

USE_TZ = True


# Numerical defaults

# Overrides the solver rule max(128, 2n + 64) everywhere when set
BINZEROS_PRECISION = int(os.getenv('BINZEROS_PRECISION', '0')) or None

BINZEROS_CURVE_POINTS = int(os.getenv('BINZEROS_CURVE_POINTS', '512'))

# Curve samples that only feed distance measurements
BINZEROS_DISTANCE_PRECISION = int(
    os.getenv('BINZEROS_DISTANCE_PRECISION', '96')
)

BINZEROS_MAX_ITERATIONS = int(os.getenv('BINZEROS_MAX_ITERATIONS', '500'))

BINZEROS_SWEEP_MAX_N = int(os.getenv('BINZEROS_SWEEP_MAX_N', '300'))

# 1 runs sweeps serially
BINZEROS_WORKERS = int(os.getenv('BINZEROS_WORKERS', '1'))

BINZEROS_SEED = int(os.getenv('BINZEROS_SEED', '20100415'))


# Django REST Framework Settings
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNICODE_JSON': False,
    'STRICT_JSON': True,
}


# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'sections': {
            'handlers': ['console'],
            'level': os.getenv('BINZEROS_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
