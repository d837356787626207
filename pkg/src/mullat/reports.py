from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one axiom or theorem check.

    ``counterexample`` holds the first violating tuple in lexicographic index
    order. A skipped report (hypothesis not met) has ``skipped`` set to the
    reason and counts as passing.
    """

    name: str
    passed: bool
    counterexample: tuple | None = None
    detail: str = ""
    skipped: str | None = None
    checked: int = 0

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return "skip"
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self, labels=None) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = _render(self.counterexample, labels)
        if self.detail:
            out["detail"] = self.detail
        if self.skipped is not None:
            out["skipped"] = self.skipped
        if self.checked:
            out["checked"] = self.checked
        return out


def skipped(name: str, reason: str) -> PropertyReport:
    return PropertyReport(name, True, skipped=reason)


def _render(value, labels):
    if isinstance(value, tuple):
        return [_render(v, labels) for v in value]
    if labels is not None and isinstance(value, int) and not isinstance(value, bool):
        return labels[value]
    return value


@dataclass
class VerdictBundle:
    reports: list[PropertyReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def add(self, report: PropertyReport) -> PropertyReport:
        self.reports.append(report)
        return report

    def failures(self) -> list[PropertyReport]:
        return [r for r in self.reports if not r.passed]

    def to_dict(self, labels=None) -> dict:
        return {
            "passed": self.passed,
            "reports": [r.to_dict(labels) for r in self.reports],
            "notes": list(self.notes),
        }
