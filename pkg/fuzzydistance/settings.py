"""
Django settings for the fuzzydistance project.

The project has no web surface: everything runs through management
commands (``python manage.py distance ...``). Settings carry the dataset
location, the measure defaults and logging.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path

import dj_database_url
import environ
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

env = environ.Env(
    DEBUG=(bool, False),
    LOG_LEVEL=(str, "INFO"),
    MOVIELENS_DIR=(str, str(BASE_DIR / "data" / "ml-100k")),
    MOVIELENS_URL=(str, "https://files.grouplens.org/datasets/movielens/ml-100k.zip"),
)

# Only used for signing; nothing here is served.
SECRET_KEY = env("SECRET_KEY", default="fuzzydistance-local-only")

DEBUG = env("DEBUG")

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    'fuzzysets',
    'metrics',
    'movielens',
    'reports',
]


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    'default': dj_database_url.parse(
        env("DATABASE_URL", default=f"sqlite:///{BASE_DIR / 'db.sqlite3'}")
    )
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = True
TIME_ZONE = 'UTC'


# MovieLens 100k
MOVIELENS_DIR = Path(env("MOVIELENS_DIR"))
MOVIELENS_URL = env("MOVIELENS_URL")
MOVIELENS_EXPECTED_RECORDS = 100_000


# Measure defaults; CLI flags override these
FUZZY_DISTANCE = {
    "ALPHA_CUTS": 51,
    "X_POINTS": 51,
    "EPSILON": 1.0,
    "DISPLAY_DECIMALS": 3,
}


REST_FRAMEWORK = {
    # Serializers only render reports; keep floats as floats
    "COERCE_DECIMAL_TO_STRING": False,
    "UNAUTHENTICATED_USER": None,
}


LOG_LEVEL = env("LOG_LEVEL")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for app in ("fuzzysets", "metrics", "movielens", "reports")
    },
}
