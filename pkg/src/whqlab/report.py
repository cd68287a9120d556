"""Check results and reports.

A :class:`Report` is an ordered list of named exact checks.  Each failing
check carries a counterexample: the first basis position (input multi-index,
then output multi-index) where the two sides differ, with both values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .tensor import LinMap, first_difference


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: dict | None = None
    detail: str = ""

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError(f"{self.name}: a passing check cannot carry a counterexample")
        if not self.passed and self.witness is None:
            raise ValueError(f"{self.name}: a failing check needs a counterexample")

    def to_json(self, fmt=str) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = jsonable(self.witness, fmt)
        if self.detail:
            out["detail"] = self.detail
        return out


def jsonable(obj, fmt):
    if isinstance(obj, dict):
        return {str(k): jsonable(v, fmt) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, fmt) for v in obj]
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj
    return fmt(obj)


def check_equal(name: str, lhs: LinMap, rhs: LinMap, detail: str = "") -> CheckResult:
    """Exact comparison of two maps; the witness is the first differing entry."""
    diff = first_difference(lhs, rhs)
    if diff is None:
        return CheckResult(name, True, None, detail)
    lhs_value, rhs_value = diff["lhs"], diff["rhs"]
    diff["lhs"] = lhs.field.format(lhs_value)
    diff["rhs"] = lhs.field.format(rhs_value)
    return CheckResult(name, False, diff, detail)


def check_flag(name: str, ok: bool, witness: dict | None = None, detail: str = "") -> CheckResult:
    if ok:
        return CheckResult(name, True, None, detail)
    return CheckResult(name, False, witness or {"reason": detail or "check failed"}, detail)


@dataclass
class Report:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        if any(c.name == result.name for c in self.checks):
            raise ValueError(f"duplicate check name {result.name!r} in report {self.title!r}")
        self.checks.append(result)
        return result

    def extend(self, results: Iterable[CheckResult]) -> None:
        for r in results:
            self.add(r)

    def equal(self, name: str, lhs: LinMap, rhs: LinMap, detail: str = "") -> CheckResult:
        return self.add(check_equal(name, lhs, rhs, detail))

    def flag(self, name: str, ok: bool, witness: dict | None = None, detail: str = "") -> CheckResult:
        return self.add(check_flag(name, ok, witness, detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }

    def summary(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks) - len(self.failures)}/{len(self.checks)})"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  [{mark}] {c.name}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        return "\n".join(lines)
