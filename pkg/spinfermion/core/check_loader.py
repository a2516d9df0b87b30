"""Plugin system for verification checks.

Every non-underscore ``*.py`` file in the built-in ``checks`` directory, and in
the configured ``extra_checks_dir``, is imported; each concrete ``CheckBase``
subclass defined there is registered under its ``NAME``.
"""

import importlib.util
import inspect
import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from spinfermion.core.config_manager import get_config_manager
from spinfermion.core.errors import SpinFermionError
from spinfermion.core.logger import get_logger
from spinfermion.core.report import CheckReport, CheckStatus
from spinfermion.utils.paths import get_checks_dir


@dataclass
class CheckInfo:
    """Information about a loaded check."""
    name: str
    description: str
    version: str
    source: str


class CheckBase(ABC):
    """Base class for all verification checks."""

    # Check metadata - subclasses should override these
    NAME = "base"
    DESCRIPTION = "Base check description"
    VERSION = "1.0.0"

    def __init__(self):
        self.logger = get_logger()

    @abstractmethod
    def execute(self, context: Dict[str, Any]) -> CheckReport:
        """
        Run the check.

        Args:
            context: Dictionary that may contain:
                - 'L': number of flavors
                - 'two_s': twice the spin
                - 'samples': number of random samples
                - 'seed': random seed
                - 'field': FieldVector for the spectrum check

        Returns:
            CheckReport with PASS or FAIL status.
        """
        pass

    def get_info(self) -> CheckInfo:
        """Get check information."""
        return CheckInfo(
            name=self.NAME,
            description=self.DESCRIPTION,
            version=self.VERSION,
            source=inspect.getfile(type(self)),
        )


class CheckLoader:
    """Loads and manages verification checks."""

    def __init__(self, check_dirs: Optional[Sequence[Path]] = None):
        if check_dirs is None:
            check_dirs = [get_checks_dir()]
            extra = get_config_manager().get("extra_checks_dir", "")
            if extra:
                check_dirs.append(Path(extra))
        self.check_dirs = list(check_dirs)
        self.logger = get_logger()
        self.checks: Dict[str, CheckBase] = {}
        self._load_checks()

    def _load_checks(self):
        """Load all checks from the configured directories."""
        for directory in self.check_dirs:
            if not directory.is_dir():
                self.logger.warning(f"Checks directory does not exist: {directory}")
                continue

            for check_file in sorted(directory.glob("*.py")):
                if check_file.name.startswith("_"):
                    continue

                try:
                    self._load_check_file(check_file)
                except Exception as e:
                    self.logger.error(f"Failed to load check file {check_file.name}: {str(e)}")

    def _load_check_file(self, file_path: Path):
        """Load a single check file."""
        module_name = f"spinfermion_checks_{file_path.parent.name}_{file_path.stem}"
        spec = importlib.util.spec_from_file_location(module_name, file_path)
        if spec is None or spec.loader is None:
            return

        module = importlib.util.module_from_spec(spec)
        sys.modules[module_name] = module
        try:
            spec.loader.exec_module(module)
        except Exception:
            sys.modules.pop(module_name, None)
            raise

        # Find check classes defined in the module
        for name, obj in inspect.getmembers(module, inspect.isclass):
            if (issubclass(obj, CheckBase) and obj is not CheckBase and
                    not inspect.isabstract(obj) and obj.__module__ == module.__name__):
                try:
                    check = obj()
                    if check.NAME in self.checks:
                        self.logger.warning(f"Check {check.NAME} from {file_path.name} replaces an earlier one")
                    self.checks[check.NAME] = check
                    self.logger.debug(f"Loaded check: {check.NAME}")
                except Exception as e:
                    self.logger.error(f"Failed to instantiate check {name}: {str(e)}")

    def get_check(self, name: str) -> Optional[CheckBase]:
        """Get a check by name."""
        return self.checks.get(name)

    def get_all_checks(self) -> List[CheckBase]:
        """Get all loaded checks, sorted by name."""
        return [self.checks[name] for name in sorted(self.checks)]

    def check_names(self) -> List[str]:
        return sorted(self.checks)

    def run_check(self, name: str, context: Dict[str, Any]) -> Optional[CheckReport]:
        """Run a check by name; ``None`` when no such check is loaded.

        Library errors propagate so callers can map them to exit codes; any
        other exception becomes a FAIL report.
        """
        check = self.get_check(name)
        if check is None:
            return None
        try:
            report = check.execute(context)
        except SpinFermionError:
            raise
        except Exception as e:
            self.logger.error(f"Check {name} execution failed: {str(e)}")
            return CheckReport(check=name, status=CheckStatus.FAIL,
                               failures=[f"check raised {type(e).__name__}: {str(e)}"])
        if report.passed:
            self.logger.success(f"Check {name} passed")
        return report

    def reload_checks(self):
        """Reload all checks from disk."""
        self.checks.clear()
        self._load_checks()


# Global check loader instance
_check_loader: Optional[CheckLoader] = None


def get_check_loader() -> CheckLoader:
    """Get or create the global check loader."""
    global _check_loader
    if _check_loader is None:
        _check_loader = CheckLoader()
    return _check_loader
