from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # General
    debug: bool = Field(default=False, alias="DEBUG")
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")

    # Pattern graph limits
    max_order: int = Field(default=16, alias="RAINBOW_MAX_ORDER")
    max_brute_force_order: int = Field(default=10, alias="RAINBOW_MAX_BRUTE_FORCE_ORDER")

    # Exhaustive search and exact criteria
    exact_budget: int = Field(default=100_000_000, alias="RAINBOW_EXACT_BUDGET")
    complete_cap: int = Field(default=12, alias="RAINBOW_COMPLETE_CAP")
    dense_margin: float = Field(default=1e-12, alias="RAINBOW_DENSE_MARGIN")
    dense_dps: int = Field(default=50, alias="RAINBOW_DENSE_DPS")

    # Hot loop
    chunk_size: int = Field(default=200_000, alias="RAINBOW_CHUNK_SIZE")
    workers: int = Field(default=1, alias="RAINBOW_WORKERS")

    # Local search defaults
    search_seed: int = Field(default=1, alias="RAINBOW_SEARCH_SEED")
    search_restarts: int = Field(default=4, alias="RAINBOW_SEARCH_RESTARTS")
    search_iterations: int = Field(default=20_000, alias="RAINBOW_SEARCH_ITERATIONS")
    search_acceptance: Literal["greedy", "anneal"] = Field(default="anneal", alias="RAINBOW_SEARCH_ACCEPTANCE")
    search_temperature: float = Field(default=1.0, alias="RAINBOW_SEARCH_TEMPERATURE")
    search_cooling: float = Field(default=0.9995, alias="RAINBOW_SEARCH_COOLING")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """Return a cached instance of Settings.

    - Loads variables from .env automatically when present.
    - Environment variables always take precedence over .env.
    - Tests that change the environment call ``get_settings.cache_clear()``.
    """
    return Settings()
