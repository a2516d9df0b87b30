"""Verification reports returned by identity checks."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class CheckStatus(Enum):
    """Check status enumeration."""
    PASS = "pass"
    FAIL = "fail"


@dataclass
class CheckReport:
    """Result of a verification check."""
    check: str
    status: CheckStatus
    failures: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @property
    def first_failure(self) -> Optional[str]:
        return self.failures[0] if self.failures else None

    @classmethod
    def from_failures(cls, check: str, failures: List[str], **details: Any) -> "CheckReport":
        """Build a report that passes exactly when ``failures`` is empty."""
        status = CheckStatus.FAIL if failures else CheckStatus.PASS
        return cls(check=check, status=status, failures=list(failures), details=dict(details))

    def to_dict(self) -> Dict[str, Any]:
        """Flat JSON form: check, status, details, then failures when any."""
        data: Dict[str, Any] = {"check": self.check, "status": self.status.value}
        data.update(self.details)
        if self.failures:
            data["first_failure"] = self.first_failure
            data["failures"] = list(self.failures)
        return data
