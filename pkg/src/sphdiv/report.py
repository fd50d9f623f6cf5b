"""Pass/fail findings emitted by validation and audit routines."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Finding:
    check: str
    subject: str
    expected: str
    actual: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "subject": self.subject,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


def all_passed(findings: list[Finding]) -> bool:
    return all(f.passed for f in findings)


def sort_findings(findings: list[Finding]) -> list[Finding]:
    """Deterministic, order-independent presentation of a findings set."""
    return sorted(findings, key=lambda f: (f.check, f.subject))
