"""Configuration package."""

from .settings import Settings, get_settings
from .config_loader import ConfigError, ConfigLoader, SystemConfig, get_config

__all__ = ['Settings', 'get_settings', 'ConfigError', 'ConfigLoader', 'SystemConfig', 'get_config']
