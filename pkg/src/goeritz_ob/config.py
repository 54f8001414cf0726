"""Configuration management for goeritz-ob."""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Bounded searches
    kernel_bound: int = Field(8, gt=0)  # |k_j| bound of the boundary-twist fallback search
    search_max_len: int = Field(4, ge=0)  # twist-word length of the reversal search
    crossing_budget: int = Field(24, gt=0)  # beta-crossings allowed in the rigidity sweep

    # Genus-two example
    example_n: int = 1  # monodromy t_d^n, must be nonzero

    # Randomized sweeps
    seed: int = 1729
    random_word_length: int = Field(6, gt=0)  # twist letters per random candidate

    # Output
    output_format: Literal["text", "structured"] = "text"
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"

    # HTTP API
    api_host: str = "0.0.0.0"
    api_port: int = 8000


def get_settings() -> Settings:
    """Get application settings."""
    return Settings()
