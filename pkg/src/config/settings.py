"""Runtime settings for the Angular Control Chart toolkit."""

from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator
from typing import Optional


class Settings(BaseSettings):
    """Application settings loaded from environment variables (prefix ``ACC_``)."""

    model_config = SettingsConfigDict(
        env_prefix="ACC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Files
    config_path: str = Field(default="config.yaml", description="System configuration YAML")
    output_dir: str = Field(default="./output", description="Directory for SVG/JSON artifacts")

    # Monte Carlo fan-out; results do not depend on it
    workers: int = Field(default=1, ge=1, description="Worker threads for Monte Carlo shards")

    # Logging
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default="./logs/acc.log")

    @field_validator('log_level')
    @classmethod
    def _upper_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'}:
            raise ValueError(f"Unknown log level: {value}")
        return level

    @field_validator('log_file')
    @classmethod
    def _empty_disables(cls, value: Optional[str]) -> Optional[str]:
        return value or None


# Global settings instance
settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create settings instance."""
    global settings
    if settings is None:
        settings = Settings()
    return settings
