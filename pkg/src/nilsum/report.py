"""Verification records and report rendering (JSON, CSV, text)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable

STATUSES = ("pass", "fail", "indeterminate")


@dataclass
class Check:
    name: str
    claim: str
    status: str
    details: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, timing: bool = True) -> dict:
        out = {"name": self.name, "claim": self.claim, "status": self.status, "details": self.details}
        if timing:
            out["elapsed_s"] = round(self.elapsed, 4)
        return out


@dataclass
class Report:
    construction: dict[str, Any]
    suites: dict[str, list[Check]] = field(default_factory=dict)
    seed: int | None = None

    def add(self, suite: str, checks: Iterable[Check]) -> None:
        self.suites.setdefault(suite, []).extend(checks)

    def all_checks(self) -> list[tuple[str, Check]]:
        return [(s, c) for s in sorted(self.suites) for c in self.suites[s]]

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for _, c in self.all_checks())

    @property
    def indeterminate(self) -> list[str]:
        return [f"{s}/{c.name}" for s, c in self.all_checks() if c.status == "indeterminate"]

    def to_json(self, timing: bool = True) -> dict:
        return {
            "construction": self.construction,
            "seed": self.seed,
            "suites": {s: [c.to_json(timing) for c in self.suites[s]] for s in sorted(self.suites)},
            "summary": {
                "checks": len(self.all_checks()),
                "failed": [f"{s}/{c.name}" for s, c in self.all_checks() if c.status == "fail"],
                "indeterminate": self.indeterminate,
            },
        }

    def render(self, fmt: str = "json", timing: bool = True) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(timing), indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["suite", "check", "status", "claim"] + (["elapsed_s"] if timing else []))
            for s, c in self.all_checks():
                w.writerow([s, c.name, c.status, c.claim] + ([f"{c.elapsed:.4f}"] if timing else []))
            return buf.getvalue()
        if fmt == "text":
            lines = []
            for s, c in self.all_checks():
                lines.append(f"[{c.status.upper():>13}] {s}/{c.name}: {c.claim}")
            verdict = "FAIL" if self.failed else "PASS"
            lines.append(f"{verdict}: {len(self.all_checks())} checks")
            return "\n".join(lines) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


def write_csv(rows: Iterable[Iterable], header: Iterable[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(header))
    for r in rows:
        w.writerow(list(r))
    return buf.getvalue()
