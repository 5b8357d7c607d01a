# libs/config/settings.py
from __future__ import annotations

import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from libs.errors import ConfigError

load_dotenv(override=False)

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

# 硬上限：只能通过环境变量收紧，不能放宽
HARD_MAX_CARRIER = 64
HARD_MAX_TABLE_ENTRIES = 2**26
HARD_ENUM_MAX_K = 20
HARD_CONGRUENCE_MAX_K = 10
HARD_HOM_SEARCH_SPACE = 2**24


class Settings(BaseModel):
    """
    Runtime knobs, read from the environment (and an optional .env):
        SNR_MAX_CARRIER, SNR_MAX_TABLE_ENTRIES, SNR_ENUM_MAX_K,
        SNR_CONGRUENCE_MAX_K, SNR_HOM_SEARCH_SPACE,
        SNR_QUOTIENT_EXHAUSTIVE_MAX_K, SNR_QUOTIENT_SPOT_DRAWS,
        SNR_QUOTIENT_SEED, SNR_SWEEP_BLOCK, LOG_LEVEL
    """

    max_carrier: int = Field(HARD_MAX_CARRIER, ge=1, le=HARD_MAX_CARRIER)
    max_table_entries: int = Field(
        HARD_MAX_TABLE_ENTRIES, ge=1, le=HARD_MAX_TABLE_ENTRIES
    )
    enum_max_k: int = Field(HARD_ENUM_MAX_K, ge=1, le=HARD_ENUM_MAX_K)
    congruence_max_k: int = Field(HARD_CONGRUENCE_MAX_K, ge=1, le=HARD_CONGRUENCE_MAX_K)
    hom_search_space: int = Field(HARD_HOM_SEARCH_SPACE, ge=1, le=HARD_HOM_SEARCH_SPACE)
    quotient_exhaustive_max_k: int = Field(6, ge=0)
    quotient_spot_draws: int = Field(1000, ge=1)
    quotient_seed: int = 0x5EED
    sweep_block: int = Field(2**18, ge=1)
    log_level: LogLevel = "WARNING"


def _int_env(name: str) -> int | None:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    # 允许 0x5EED 这种写法
    try:
        return int(raw, 0)
    except ValueError as e:
        raise ConfigError(f"{name}={raw!r} is not an integer") from e


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    values: dict[str, object] = {}
    for field, env in (
        ("max_carrier", "SNR_MAX_CARRIER"),
        ("max_table_entries", "SNR_MAX_TABLE_ENTRIES"),
        ("enum_max_k", "SNR_ENUM_MAX_K"),
        ("congruence_max_k", "SNR_CONGRUENCE_MAX_K"),
        ("hom_search_space", "SNR_HOM_SEARCH_SPACE"),
        ("quotient_exhaustive_max_k", "SNR_QUOTIENT_EXHAUSTIVE_MAX_K"),
        ("quotient_spot_draws", "SNR_QUOTIENT_SPOT_DRAWS"),
        ("quotient_seed", "SNR_QUOTIENT_SEED"),
        ("sweep_block", "SNR_SWEEP_BLOCK"),
    ):
        value = _int_env(env)
        if value is not None:
            values[field] = value

    log_level = os.getenv("LOG_LEVEL")
    if log_level:
        values["log_level"] = log_level.upper()

    try:
        return Settings(**values)
    except ValidationError as e:
        fields = ", ".join(".".join(str(p) for p in err["loc"]) for err in e.errors())
        raise ConfigError(f"invalid settings: {fields}") from e
