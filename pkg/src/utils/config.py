"""Application configuration"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from loguru import logger
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine and command line settings

    Values come from keyword arguments, then ``ALLIANCE_*`` environment
    variables, then a ``.env`` file, then field defaults.
    """

    model_config = SettingsConfigDict(
        env_prefix="ALLIANCE_",
        env_file=".env",
        extra="ignore",
    )

    # Parallelism
    workers: int = Field(default=0, ge=0, description="Worker processes, 0 = one per CPU")

    # Caps
    naive_limit: int = Field(default=24, ge=1, description="Largest order for subset enumeration")
    canonical_limit: int = Field(default=12, ge=1, description="Largest order for canonical forms")
    exhaustive_limit: int = Field(default=7, ge=1, description="Largest order for all-graph catalogs")

    # Logging and audit
    log_level: str = Field(default="WARNING", description="loguru level for the stderr sink")
    journal_path: Optional[str] = Field(default=None, description="JSONL run journal")

    def resolved_workers(self, override: Optional[int] = None) -> int:
        """Effective worker count

        Args:
            override: Explicit worker count (wins over the setting)

        Returns:
            Positive number of worker processes
        """
        workers = self.workers if override is None else override
        if workers == 0:
            return os.cpu_count() or 1
        return workers


def load_yaml_settings(path: str) -> Dict[str, Any]:
    """Read settings values from a YAML file

    Args:
        path: Path to a YAML mapping of setting names to values

    Returns:
        Mapping suitable for ``Settings(**values)``
    """
    config_path = Path(path)
    with open(config_path, "r", encoding="utf-8") as f:
        values = yaml.safe_load(f) or {}

    if not isinstance(values, dict):
        raise ValueError(f"Settings file {config_path} must contain a mapping")

    logger.debug(f"Loaded settings file: {config_path}")
    return values


def build_settings(config_file: Optional[str] = None, **overrides: Any) -> Settings:
    """Build settings with file < environment < explicit overrides precedence

    Args:
        config_file: Optional YAML settings file
        **overrides: Explicit values, ``None`` entries are ignored

    Returns:
        Settings instance
    """
    explicit = {key: value for key, value in overrides.items() if value is not None}
    if not config_file:
        return Settings(**explicit)

    file_values = load_yaml_settings(config_file)
    env_settings = Settings()
    # Environment variables beat the file; a field is taken from the
    # environment only when it was set there.
    env_values = env_settings.model_dump(exclude_unset=True)
    merged = {**file_values, **env_values, **explicit}
    return Settings(**merged)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide default settings, built lazily"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def set_settings(settings: Optional[Settings]) -> None:
    """Replace the process-wide default settings (``None`` resets)"""
    global _settings
    _settings = settings
