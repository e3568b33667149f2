"""Shared configuration, logging and errors"""

from .config import Settings, build_settings, get_settings, set_settings
from .logger import setup_logging

__all__ = ["Settings", "build_settings", "get_settings", "set_settings", "setup_logging"]
