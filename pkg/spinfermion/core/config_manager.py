"""Configuration management with JSON persistence and environment overrides."""

import json
import os
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Optional

from spinfermion.core.logger import get_logger
from spinfermion.utils.paths import get_config_dir

MAX_L_ENV = "SPINFERMION_MAX_L"


@dataclass
class AppConfig:
    """Main application configuration."""
    max_flavors: int = 6
    output_format: str = "json"  # json or text
    float_digits: int = 12
    samples: int = 20
    seed: int = 20240917
    log_level: str = "WARNING"
    extra_checks_dir: str = ""


class ConfigManager:
    """Manages configuration persistence."""

    CONFIG_FILE = "config.json"

    def __init__(self):
        self.logger = get_logger()
        self.config_dir = get_config_dir()
        self.config_file = self.config_dir / self.CONFIG_FILE
        self.config = self._load_config()
        self._apply_environment()

    def _load_config(self) -> AppConfig:
        """Load configuration from file."""
        if self.config_file.exists():
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    data = json.load(f)
                return self._dict_to_config(data)
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                self.logger.warning(f"Ignoring unreadable config {self.config_file}: {str(e)}")
                return AppConfig()
        return AppConfig()

    def _dict_to_config(self, data: Dict[str, Any]) -> AppConfig:
        """Convert dictionary to AppConfig, keeping defaults for unknown or missing keys."""
        defaults = AppConfig()
        values = {}
        for spec in fields(AppConfig):
            default = getattr(defaults, spec.name)
            values[spec.name] = type(default)(data.get(spec.name, default))
        return AppConfig(**values)

    def _apply_environment(self):
        """Apply ``SPINFERMION_MAX_L`` on top of the stored value."""
        raw = os.environ.get(MAX_L_ENV)
        if raw is None:
            return
        try:
            value = int(raw)
        except ValueError:
            self.logger.warning(f"Ignoring non-integer {MAX_L_ENV}={raw!r}")
            return
        if value < 1:
            self.logger.warning(f"Ignoring non-positive {MAX_L_ENV}={raw!r}")
            return
        self.config.max_flavors = value

    def save(self):
        """Save configuration to file."""
        with open(self.config_file, 'w', encoding='utf-8') as f:
            json.dump(asdict(self.config), f, indent=2, ensure_ascii=False)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value."""
        return getattr(self.config, key, default)

    def set(self, key: str, value: Any):
        """Set a configuration value."""
        if hasattr(self.config, key):
            setattr(self.config, key, value)
            self.save()


# Global config manager instance
_config_manager: Optional[ConfigManager] = None


def get_config_manager() -> ConfigManager:
    """Get or create the global config manager."""
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager
