"""Configuration management for DeltaBound."""

from deltabound.config.settings import EnumerationConfig, Settings

__all__ = ["Settings", "EnumerationConfig"]
