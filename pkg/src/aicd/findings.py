"""Finding records produced by validation and compatibility checks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering


@total_ordering
class Severity(Enum):
    ERROR = "Error"
    WARNING = "Warning"
    INFO = "Info"

    def _rank(self) -> int:
        return list(type(self)).index(self)

    def __lt__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._rank() < other._rank()


class Dimension(Enum):
    """Which facet of the interface a finding is about.  Declaration order
    doubles as report section order."""

    SIGNAL = "Signal"
    PHYSICAL = "Physical"
    TRANSPORT = "Transport"
    SOFTWARE = "Software"
    AUTONOMY = "Autonomy"
    CONSIDERATION = "Consideration"
    VERIFICATION = "Verification"
    META = "Meta"

    def _rank(self) -> int:
        return list(type(self)).index(self)


@dataclass(frozen=True, slots=True)
class Finding:
    severity: Severity
    code: str
    path: str
    message: str
    dimension: Dimension

    def sort_key(self) -> tuple:
        return (self.dimension._rank(), self.severity._rank(), self.path, self.code)


def sort_findings(findings: list[Finding]) -> list[Finding]:
    return sorted(findings, key=Finding.sort_key)
