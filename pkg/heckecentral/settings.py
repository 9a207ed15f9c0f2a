"""
Django settings for the heckecentral project.

heckecentral has no web surface: Django provides the management commands,
the settings layer and the test runner for the exact-arithmetic engine.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Load environment variables from .env file
# Load .env.local for development, .env otherwise
env_file = '.env.local' if os.path.exists('.env.local') else '.env'
load_dotenv(env_file)

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only used to satisfy Django's startup checks; nothing is signed.
SECRET_KEY = os.getenv('SECRET_KEY', 'heckecentral-local-only')

DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    # Local apps
    'heckecentral',
    'exactalgebra',
    'partitions',
    'hecke',
    'permmodules',
    'centraliser',
    'cellular',
    'diagnostics',
]

MIDDLEWARE = []


# Database
# Nothing is persisted; the file only exists so that management commands start.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'heckecentral.sqlite3',
        'TEST': {
            'NAME': ':memory:',
        }
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Django REST Framework
# Serializers and the JSON renderer are used for report output only.
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}


# Engine configuration

# Seed for every randomized spot check (ideal membership, law checks)
HECKE_RANDOM_SEED = int(os.getenv('HECKE_RANDOM_SEED', '20240601'))

# Internal assertions of the centraliser engine
HECKE_SANITY_CHECKS = os.getenv('HECKE_SANITY_CHECKS', 'True').lower() == 'true'

# Thread pool size for per-field loops; output order never depends on it
HECKE_FIELD_WORKERS = int(os.getenv('HECKE_FIELD_WORKERS', '1'))

# Primes probed individually by base change reports
HECKE_FAILING_PRIME_BOUND = int(os.getenv('HECKE_FAILING_PRIME_BOUND', '7'))

HECKE_DEFAULT_FIELD = os.getenv('HECKE_DEFAULT_FIELD', 'Q')

HECKE_LOG_LEVEL = os.getenv('HECKE_LOG_LEVEL', 'WARNING')


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': HECKE_LOG_LEVEL,
    },
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
