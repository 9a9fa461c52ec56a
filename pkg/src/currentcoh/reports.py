"""Small pass/fail report values shared by the verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, label: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(label, passed, detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{self.name}: {status} ({len(self.checks)} checks)"]
        for c in self.failures():
            lines.append(f"  FAIL {c.label}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.ok,
            "checks": [
                {"label": c.label, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }
