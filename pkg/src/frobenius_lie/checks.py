"""Pass/fail records returned by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    failures: tuple = field(default_factory=tuple)
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed
