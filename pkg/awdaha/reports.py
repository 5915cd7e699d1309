"""Verification results in text and machine-readable form."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any, Union

from .algebras.tbasis import TElement
from .free_algebra import NCPoly
from .utils import summarize_element

Residual = Union[NCPoly, TElement]


@dataclass(frozen=True)
class CheckResult:
    """One verified item.

    Attributes:
        suite: Suite the check belongs to, e.g. ``psi``
        item: What was checked, e.g. ``rule B*A``
        passed: Whether the check passed
        residual: Display form of the nonzero residual of a failed check
        detail: Optional extra information (counts, ranks)
    """

    suite: str
    item: str
    passed: bool
    residual: str | None = None
    detail: str | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "item": self.item,
            "passed": self.passed,
            "residual": self.residual,
            "detail": self.detail,
        }


@dataclass
class Report:
    """An ordered collection of check results."""

    name: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def __len__(self) -> int:
        return len(self.checks)

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.checks)

    def record(
        self,
        item: str,
        passed: bool,
        residual: Residual | None = None,
        detail: str | None = None,
    ) -> CheckResult:
        """Append a result; ``residual`` is kept only for failed checks."""
        text = None if passed or residual is None else summarize_element(residual)
        check = CheckResult(self.name, item, passed, text, detail)
        self.checks.append(check)
        return check

    def zero(self, item: str, residual: Residual, detail: str | None = None) -> bool:
        """Record a check that passes iff ``residual`` is zero."""
        return self.record(item, residual.is_zero(), residual, detail).passed

    def extend(self, checks: Iterable[CheckResult]) -> None:
        self.checks.extend(checks)

    def to_text(self) -> str:
        lines = []
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{status} {check.suite}: {check.item}"
            if check.detail:
                line += f" ({check.detail})"
            lines.append(line)
            if check.residual is not None:
                lines.append(f"    residual: {check.residual}")
        failed = len(self.failures)
        lines.append(f"{self.name}: {len(self.checks)} checks, {failed} failed")
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [check.to_json() for check in self.checks],
        }


def merge(name: str, reports: Iterable[Report]) -> Report:
    """Concatenate several reports under a new name."""
    merged = Report(name)
    for report in reports:
        merged.extend(report.checks)
    return merged
