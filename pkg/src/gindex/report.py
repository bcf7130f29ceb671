"""Named pass/fail results with a printable reason for each failure."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Named boolean checks with the offending values for failures."""

    name: str
    results: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.results[label] = bool(ok)
        if not ok:
            self.details[label] = detail

    def extend(self, other: CheckReport) -> None:
        for label, ok in other.results.items():
            self.add(f"{other.name}: {label}", ok, other.details.get(label, ""))

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def failures(self) -> dict[str, str]:
        return {label: self.details.get(label, "") for label, ok in self.results.items() if not ok}

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        out = []
        for label, ok in self.results.items():
            out.append(f"{'PASS' if ok else 'FAIL'}  {label}")
            if not ok and self.details.get(label):
                out.extend("      " + line for line in self.details[label].splitlines())
        return out


def check_equal(report: CheckReport, label: str, lhs, rhs) -> None:
    report.add(label, lhs == rhs, f"{lhs} != {rhs}")
