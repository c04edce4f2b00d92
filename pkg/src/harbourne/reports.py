"""Multi-check reports.

Validation and audits never fail fast: every check is evaluated and reported,
so a consumer (the CLI in particular) can show all violations at once.  A
check can also be *unverifiable* when the given data cannot witness the
condition either way.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    UNVERIFIABLE = "unverifiable"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.status is Status.PASS for c in self.checks)

    @property
    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if c.status is Status.FAIL)

    @property
    def unverifiable(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if c.status is Status.UNVERIFIABLE)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def passed(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name, Status.PASS, detail)


def failed(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name, Status.FAIL, detail)


def unverifiable(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name, Status.UNVERIFIABLE, detail)
