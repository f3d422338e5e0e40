"""Validation reports.

Validators accumulate named checks with witnesses instead of raising on
the first failure, so a caller (or the CLI) can show everything that is
wrong with an instance at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str = ""

    def __str__(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        if self.passed or not self.witness:
            return f"{mark:4} {self.name}"
        return f"{mark:4} {self.name}: {self.witness}"


@dataclass
class ValidationReport:
    """Outcome of validating one structure."""

    subject: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "") -> bool:
        self.checks.append(CheckResult(name, bool(passed), witness if not passed else ""))
        return bool(passed)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        head = f"{self.subject}: {'PASS' if self.ok else 'FAIL'} ({len(self.checks)} checks)"
        lines = [head] + [f"  {c}" for c in self.checks if not c.passed]
        return "\n".join(lines)

    def to_payload(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
        }
