"""Path utilities for spinfermion."""

import os
from pathlib import Path

HOME_ENV = "SPINFERMION_HOME"


def get_app_root() -> Path:
    """Get the package directory."""
    return Path(__file__).parent.parent


def get_config_dir() -> Path:
    """Get the configuration directory, honouring ``SPINFERMION_HOME``."""
    override = os.environ.get(HOME_ENV)
    config_dir = Path(override) if override else Path.home() / ".spinfermion"
    return ensure_dir(config_dir)


def get_checks_dir() -> Path:
    """Get the built-in checks directory."""
    return get_app_root() / "checks"


def ensure_dir(path: Path) -> Path:
    """Ensure a directory exists, creating it if necessary."""
    path.mkdir(parents=True, exist_ok=True)
    return path
