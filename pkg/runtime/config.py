"""
Runtime Settings
Environment-driven limits for verification runs
"""

import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, Field, ValidationError

from .errors import ConfigurationError


class TorskurSettings(BaseModel):
    """Limits and knobs read from TORSKUR_* environment variables"""
    threads: int = Field(default=1, ge=1)
    max_n: int = Field(default=4, ge=1)
    max_deg: int = Field(default=8, ge=0)
    window_cap: int = Field(default=12, ge=2)
    log_level: str = "WARNING"


_ENV_FIELDS = {
    'threads': 'TORSKUR_THREADS',
    'max_n': 'TORSKUR_MAX_N',
    'max_deg': 'TORSKUR_MAX_DEG',
    'window_cap': 'TORSKUR_WINDOW_CAP',
    'log_level': 'TORSKUR_LOG_LEVEL',
}


def settings_from_env(environ: Optional[dict[str, str]] = None) -> TorskurSettings:
    """
    Build settings from an environment mapping

    Args:
        environ: mapping to read, defaults to os.environ

    Returns:
        Validated settings

    Raises:
        ConfigurationError: a variable is present but invalid
    """
    environ = os.environ if environ is None else environ
    values = {name: environ[var] for name, var in _ENV_FIELDS.items() if environ.get(var)}
    try:
        return TorskurSettings(**values)
    except ValidationError as e:
        bad = ", ".join(_ENV_FIELDS[str(err['loc'][0])] for err in e.errors() if err['loc'])
        raise ConfigurationError(f"invalid environment configuration: {bad or e}") from e


@lru_cache(maxsize=1)
def get_settings() -> TorskurSettings:
    """Process-wide settings; load_dotenv() must run before the first call"""
    return settings_from_env()
