"""Report assembly and rendering (JSON, CSV and human-readable text)."""

from __future__ import annotations

import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional

from ..certify.checks import OVERALL_STATUSES, Certificate
from ..certify.results import CheckResult

CSV_COLUMNS = ("k", "M", "degrees", "l", "check", "status", "value", "bound")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 64

_GREEN = "\033[92m"
_RED = "\033[91m"
_YELLOW = "\033[93m"
_DIM = "\033[2m"
_RESET = "\033[0m"


def tally(certificates: Iterable[Certificate], entries: Iterable[Mapping[str, Any]] = ()) -> Dict[str, int]:
    """Status counts over certificates (overall) and report entries (status)."""

    counts = Counter(certificate.overall for certificate in certificates)
    counts.update(entry["status"] for entry in entries)
    return {status: counts.get(status, 0) for status in OVERALL_STATUSES}


@dataclass(slots=True)
class ReportDocument:
    """Everything one command run produced.

    ``analytic`` holds lemma-suite entries and ``quantities`` the plain
    computations of the query commands; both use the entry layout
    ``{name, status, detail}`` with the checks under ``detail["checks"]``.
    """

    tool_version: str
    spec_echo: Dict[str, Any]
    certificates: List[Certificate] = field(default_factory=list)
    analytic: List[Dict[str, Any]] = field(default_factory=list)
    quantities: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        counted = tally(self.certificates, [*self.analytic, *self.quantities])
        if not self.summary:
            self.summary = counted
        elif self.summary != counted:
            raise ValueError(f"Summary {self.summary} does not match the report contents {counted}")

    @property
    def exit_code(self) -> int:
        """0 when everything passes, 1 on any failure, 2 when something is undecided."""

        if self.summary.get("fail", 0):
            return EXIT_FAIL
        if self.summary.get("inconclusive", 0) or self.summary.get("out_of_hypotheses", 0):
            return EXIT_UNDECIDED
        return EXIT_OK

    # -- JSON -------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tool_version": self.tool_version,
            "spec_echo": self.spec_echo,
            "certificates": [certificate.to_dict() for certificate in self.certificates],
            "analytic": self.analytic,
            "quantities": self.quantities,
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        data = json.loads(text)
        return cls(
            tool_version=data["tool_version"],
            spec_echo=data["spec_echo"],
            certificates=[Certificate.from_dict(item) for item in data["certificates"]],
            analytic=data.get("analytic", []),
            quantities=data.get("quantities", []),
            summary=data["summary"],
        )

    # -- CSV --------------------------------------------------------------------

    def rows(self) -> List[Dict[str, str]]:
        """One flat row per check, certificates first, then analytic entries and quantities."""

        rows: List[Dict[str, str]] = []
        for certificate in self.certificates:
            for check in certificate.checks:
                rows.append(_row(str(certificate.k), str(certificate.M), certificate.degrees.label(), check.to_dict()))
        for entry in [*self.analytic, *self.quantities]:
            params = entry["detail"].get("params", {})
            for check in entry["detail"].get("checks", []):
                rows.append(_row(str(params.get("k", "")), str(params.get("M", "")), str(params.get("degrees", "")), check))
        return rows

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows())
        return buffer.getvalue()

    # -- text -------------------------------------------------------------------

    def render_text(self, use_color: Optional[bool] = None) -> str:
        if use_color is None:
            use_color = sys.stdout.isatty()

        def colorize(text: str, code: str) -> str:
            return f"{code}{text}{_RESET}" if use_color else text

        lines: List[str] = []
        for certificate in self.certificates:
            header = f"Degrees ({certificate.degrees.label()}), k={certificate.k}, M={certificate.M}"
            lines.append(f"{header}: {_overall_label(certificate.overall, colorize)}")
            lines.extend(_check_line(check, colorize) for check in certificate.checks)
            lines.append("")
        for entry in [*self.analytic, *self.quantities]:
            params = entry["detail"].get("params", {})
            described = ", ".join(f"{key}={value}" for key, value in params.items())
            lines.append(f"{entry['name']} ({described}): {_overall_label(entry['status'], colorize)}")
            for item in entry["detail"].get("checks", []):
                lines.append(_check_line(CheckResult.from_dict(item), colorize))
            for key, value in entry["detail"].get("values", {}).items():
                lines.append(f"    - {key}: {_format_value(value)}")
            lines.append("")

        parts = [f"{count} {status}" for status, count in self.summary.items() if count]
        lines.append("Summary: " + (", ".join(parts) if parts else "nothing checked"))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str, use_color: Optional[bool] = None) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.render_text(use_color)
        raise ValueError(f"Unknown report format {fmt!r}; expected json, csv or text")


def _row(k: str, M: str, degrees: str, check: Mapping[str, Any]) -> Dict[str, str]:
    level = check.get("level")
    return {
        "k": k,
        "M": M,
        "degrees": degrees,
        "l": "" if level is None else str(level),
        "check": check["name"],
        "status": check["status"],
        "value": check["value"],
        "bound": check["bound"],
    }


def _overall_label(status: str, colorize) -> str:
    color = {"pass": _GREEN, "fail": _RED}.get(status, _YELLOW)
    return colorize(status.upper(), color)


def _check_line(check: CheckResult, colorize) -> str:
    if check.severity == "info":
        label = colorize("[INFO]", _DIM)
    elif check.passed:
        label = colorize("[OK]", _GREEN)
    elif check.status == "fail":
        label = colorize("[FAIL]", _RED)
    else:
        label = colorize("[??]", _YELLOW)
    where = "" if check.level is None else f" (l={check.level})"
    relation = f" {check.relation} " if check.relation else " vs "
    return f"  {label} {check.name}{where}: {check.value}{relation}{check.bound}  [{check.paper_anchor}]"


def _format_value(value: Any) -> str:
    if isinstance(value, list):
        shown = ", ".join(str(item) for item in value[:12])
        return f"[{shown}{', ...' if len(value) > 12 else ''}] ({len(value)} entries)"
    return str(value)
