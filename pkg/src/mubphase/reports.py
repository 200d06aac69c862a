"""Pass/fail records produced by the verification routines."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float
    note: str = ""
    skipped: bool = False

    @property
    def passed(self) -> bool:
        if self.skipped:
            return True
        return math.isfinite(self.residual) and self.residual < self.tolerance

    def line(self) -> str:
        tag = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        text = f"[{tag}] {self.name}: residual={self.residual:.3e} tol={self.tolerance:.0e}"
        return f"{text} ({self.note})" if self.note else text


@dataclass
class Report:
    command: str
    dim: int
    checks: list[Check] = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]
