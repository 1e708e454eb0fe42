"""Uniform pass/fail records produced by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named verification check."""

    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail}" if self.detail else f"{status} {self.name}"


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(result.passed for result in results)


def failing(results: Iterable[CheckResult]) -> list[CheckResult]:
    return [result for result in results if not result.passed]
