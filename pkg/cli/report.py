"""Structured reports: schema, JSON and text rendering, and the run index."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from hashlib import sha1
from pathlib import Path
from typing import Any

from vertex import CheckSummary

SCHEMA_VERSION = "1"
ARTIFACT_VERSION = "0.1.0"
VERDICTS = ("pass", "fail", "refused", "info")


@dataclass(slots=True)
class CheckRecord:
    name: str
    anchor: str
    instances: int
    verdict: str
    details: dict[str, Any] = field(default_factory=dict)
    counterexample: str | None = None

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"Unsupported verdict: {self.verdict}")

    @classmethod
    def from_summary(cls, summary: CheckSummary) -> CheckRecord:
        details = dict(summary.details)
        if summary.refused:
            details["reason"] = summary.refused
        details["failures"] = summary.failures
        return cls(
            name=summary.name,
            anchor=summary.anchor,
            instances=summary.instances,
            verdict=summary.verdict,
            details=details,
            counterexample=summary.counterexample,
        )

    @classmethod
    def info(cls, name: str, anchor: str, **details: Any) -> CheckRecord:
        return cls(name=name, anchor=anchor, instances=0, verdict="info", details=details)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "instances": self.instances,
            "verdict": self.verdict,
            "details": self.details,
            "counterexample": self.counterexample,
        }


@dataclass(slots=True)
class Report:
    command: str
    config: dict[str, Any]
    checks: list[CheckRecord] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)
    wall_time_seconds: float | None = None

    @property
    def failed(self) -> int:
        return sum(1 for check in self.checks if check.verdict == "fail")

    @property
    def passed(self) -> int:
        return sum(1 for check in self.checks if check.verdict == "pass")

    @property
    def refused(self) -> bool:
        return any(check.verdict == "refused" for check in self.checks)

    def add(self, record: CheckRecord | CheckSummary) -> None:
        self.checks.append(record if isinstance(record, CheckRecord) else CheckRecord.from_summary(record))

    def to_dict(self) -> dict[str, Any]:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "artifact_version": ARTIFACT_VERSION,
            "command": self.command,
            "config": self.config,
            "summary": {"checks": len(self.checks), "passed": self.passed, "failed": self.failed},
            "checks": [check.to_dict() for check in self.checks],
            "data": self.data,
        }
        if self.wall_time_seconds is not None:
            payload["wall_time_seconds"] = round(self.wall_time_seconds, 3)
        return payload


def render_structured(report: Report) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=True, default=str) + "\n"


def render_text(report: Report) -> str:
    payload = report.to_dict()
    lines = [
        f"{payload['command']} ({payload['config'].get('lattice_source') or 'default lattice'}, ring {payload['config'].get('ring_token')})",
    ]
    for key in sorted(payload["data"]):
        lines.append(f"  {key}: {payload['data'][key]}")
    lines.append("")
    for check in payload["checks"]:
        lines.append(f"[{check['verdict'].upper():>7}] {check['name']} ({check['instances']} instances)")
        if check["counterexample"]:
            lines.append(f"          counterexample: {check['counterexample']}")
        reason = check["details"].get("reason")
        if reason:
            lines.append(f"          reason: {reason}")
    summary = payload["summary"]
    lines.append("")
    lines.append(f"{summary['passed']} passed, {summary['failed']} failed, {summary['checks']} checks")
    if "wall_time_seconds" in payload:
        lines.append(f"wall time {payload['wall_time_seconds']}s")
    return "\n".join(lines) + "\n"


class ReportWriter:
    """Writes a report to stdout or a file and appends a line to runs.jsonl next to file outputs."""

    def __init__(self, output: str | Path | None, *, format: str = "text") -> None:
        self.output = Path(output) if output else None
        self.format = format

    def render(self, report: Report) -> str:
        if self.format == "structured":
            return render_structured(report)
        return render_text(report)

    def write(self, report: Report) -> str:
        rendered = self.render(report)
        if self.output is None:
            print(rendered, end="")
            return rendered
        self.output.parent.mkdir(parents=True, exist_ok=True)
        self.output.write_text(rendered, encoding="utf-8")
        self._append_index(report, rendered)
        return rendered

    @property
    def index_path(self) -> Path | None:
        return self.output.parent / "runs.jsonl" if self.output else None

    def _append_index(self, report: Report, rendered: str) -> None:
        entry = {
            "command": report.command,
            "lattice": report.config.get("lattice_source"),
            "ring": report.config.get("ring_token"),
            "seed": report.config.get("seed"),
            "passed": report.passed,
            "failed": report.failed,
            "output": str(self.output),
            "report_hash": sha1(rendered.encode("utf-8")).hexdigest(),
        }
        with self.index_path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(entry, ensure_ascii=True, sort_keys=True) + "\n")


__all__ = [
    "ARTIFACT_VERSION",
    "SCHEMA_VERSION",
    "CheckRecord",
    "Report",
    "ReportWriter",
    "render_structured",
    "render_text",
]
