__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


import os
from typing import Optional

# Seed override flag
SEED_ENV: str = "SYMSCALE_SEED"

# Slow acceptance tests flag
SLOW_ENV: str = "SYMSCALE_RUN_SLOW"


def get_module_path() -> str:
    """
    Get the module path.
    :return:
    """
    return os.path.dirname(os.path.abspath(__file__))


def get_seed_override() -> Optional[int]:
    """
    Return the global seed set through SYMSCALE_SEED, if any.
    :return:
    """
    value: Optional[str] = os.environ.get(SEED_ENV)
    if value is None or not value.strip():
        return None
    try:
        return int(value)
    except ValueError as value_error:
        from symscale.exceptions import ConfigError
        raise ConfigError(f'{SEED_ENV}={value!r} is not an integer') from value_error


def is_slow_enabled() -> bool:
    """
    Return flag for whether the slow end-to-end tests are enabled.
    :return:
    """
    if SLOW_ENV not in os.environ:
        return False
    return os.environ[SLOW_ENV].lower() == "true"


def enable_slow():
    """
    Enable the slow end-to-end tests.
    :return:
    """
    os.environ[SLOW_ENV] = "true"


def disable_slow():
    """
    Disable the slow end-to-end tests.
    :return:
    """
    os.environ[SLOW_ENV] = "false"
