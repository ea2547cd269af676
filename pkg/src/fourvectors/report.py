"""Line-per-item check reports shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List

OK = "OK"
FAIL = "FAIL"
WARN = "WARN"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        # INCONCLUSIVE counts as a failure; WARN does not
        return self.status in (OK, WARN)

    def line(self) -> str:
        if self.detail:
            return f"{self.name}: {self.detail}, {self.status}"
        return f"{self.name}: {self.status}"


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)


def render(results: List[CheckResult]) -> str:
    return "\n".join(r.line() for r in results)
