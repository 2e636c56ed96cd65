from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from .errors import UsageError

__all__ = ("Settings", "load_settings")


DEFAULT_PREC = 128
DEFAULT_MAX_PREC = 4096


def _env_int(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default

    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None

    if value < minimum:
        raise UsageError(f"{name} must be at least {minimum}, got {value}")

    return value


@dataclass(frozen=True)
class Settings:
    prec: int = DEFAULT_PREC
    max_prec: int = DEFAULT_MAX_PREC
    jobs: int = 1
    log_level: int = logging.WARNING


def load_settings(*, dotenv: bool = True) -> Settings:
    """Reads HYPCONST_* variables, after loading a .env file if present.

    Values already in the process environment win over the .env file.
    """
    if dotenv:
        load_dotenv(override=False)

    level_name = os.getenv("HYPCONST_LOG_LEVEL", "WARNING").upper()
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        raise UsageError(f"HYPCONST_LOG_LEVEL is not a logging level: {level_name!r}")

    max_prec = _env_int("HYPCONST_MAX_PREC", DEFAULT_MAX_PREC, 8)
    prec = _env_int("HYPCONST_PREC", DEFAULT_PREC, 8)
    if prec > max_prec:
        raise UsageError(f"HYPCONST_PREC={prec} exceeds HYPCONST_MAX_PREC={max_prec}")

    return Settings(prec=prec, max_prec=max_prec, jobs=_env_int("HYPCONST_JOBS", 1, 1), log_level=level)
