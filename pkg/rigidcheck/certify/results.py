from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Literal, Mapping, Optional

Status = Literal["pass", "fail", "inconclusive"]
Severity = Literal["error", "info"]

STATUSES = ("pass", "fail", "inconclusive")

_RELATIONS: Dict[str, Callable[[Any, Any], bool]] = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
}


def exact_str(value: int | Fraction) -> str:
    """Integers as digits, rationals as ``p/q``."""

    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass(slots=True, frozen=True)
class CheckResult:
    name: str
    status: Status
    value: str
    bound: str
    paper_anchor: str
    relation: str = ""
    level: Optional[int] = None
    severity: Severity = "error"

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"Unknown check status {self.status!r}")
        if self.severity not in ("error", "info"):
            raise ValueError(f"Unknown check severity {self.severity!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_info(self) -> "CheckResult":
        return CheckResult(
            self.name, self.status, self.value, self.bound, self.paper_anchor, self.relation, self.level, "info"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "value": self.value,
            "bound": self.bound,
            "relation": self.relation,
            "paper_anchor": self.paper_anchor,
            "level": self.level,
            "severity": self.severity,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CheckResult":
        return cls(
            name=data["name"],
            status=data["status"],
            value=data["value"],
            bound=data["bound"],
            paper_anchor=data["paper_anchor"],
            relation=data.get("relation", ""),
            level=data.get("level"),
            severity=data.get("severity", "error"),
        )


def exact_check(
    name: str,
    value: int | Fraction,
    relation: str,
    bound: int | Fraction,
    paper_anchor: str,
    level: Optional[int] = None,
    severity: Severity = "error",
) -> CheckResult:
    """Compare two exact numbers; the status is pass or fail, never inconclusive."""

    try:
        compare = _RELATIONS[relation]
    except KeyError:
        raise KeyError(f"Unknown relation {relation!r}; expected one of {sorted(_RELATIONS)}") from None
    status: Status = "pass" if compare(value, bound) else "fail"
    return CheckResult(name, status, exact_str(value), exact_str(bound), paper_anchor, relation, level, severity)


def combine_status(checks: Iterable[CheckResult]) -> Status:
    """fail beats inconclusive beats pass; informational checks are ignored."""

    statuses = {check.status for check in checks if check.severity == "error"}
    if "fail" in statuses:
        return "fail"
    if "inconclusive" in statuses:
        return "inconclusive"
    return "pass"
