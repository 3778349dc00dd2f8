import os
from pathlib import Path

from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv()

SECRET_KEY = os.getenv("SECRET_KEY", "fogwarn-local-only")

DEBUG = True if os.getenv("DEBUG") == "True" else False

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django_extensions",
    "core",
    "stable",
    "trajectory",
    "channel",
    "fog",
    "metrics",
    "sim",
]


if os.getenv("BASE_NAME"):
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.postgresql_psycopg2",
            "NAME": os.getenv("BASE_NAME"),
            "USER": os.getenv("BASE_USER"),
            "PASSWORD": os.getenv("BASE_PASSWORD"),
            "HOST": os.getenv("BASE_HOST"),
            "PORT": os.getenv("BASE_PORT"),
        }
    }
else:
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.sqlite3",
            "NAME": BASE_DIR / "db.sqlite3",
        }
    }


LANGUAGE_CODE = "ru-ru"

TIME_ZONE = "Europe/Moscow"

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


if os.getenv("REDIS_URL"):
    CACHES = {
        "default": {
            "BACKEND": "django_redis.cache.RedisCache",
            "LOCATION": os.getenv("REDIS_URL"),
            "OPTIONS": {
                "CLIENT_CLASS": "django_redis.client.DefaultClient",
            },
            "KEY_PREFIX": "fogwarn",
        }
    }
else:
    CACHES = {
        "default": {
            "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
            "LOCATION": "fogwarn",
        }
    }

# Время жизни кешированных результатов подгонки (сек)
FIT_CACHE_SECONDS = 24 * 60 * 60


LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
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
        for app in ("stable", "trajectory", "channel", "fog", "metrics", "sim")
    },
}


FOGWARN_OUTPUT_DIR = Path(os.getenv("FOGWARN_OUTPUT_DIR", BASE_DIR / "output"))
FOGWARN_SWEEP_REPEATS = int(os.getenv("FOGWARN_SWEEP_REPEATS", "20"))
