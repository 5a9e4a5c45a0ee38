"""Verification reports: named checks with per-item status and JSON output."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
UNDECIDED = "undecided"


@dataclass
class ReportItem:
    desc: str
    status: str
    witness: str = ""


@dataclass
class Report:
    check_name: str
    items: list = field(default_factory=list)
    timing_ms: float = 0.0
    params: dict = field(default_factory=dict)

    def add(self, desc, ok, witness=""):
        self.items.append(ReportItem(desc, PASS if ok else FAIL, witness))

    def add_undecided(self, desc, witness=""):
        self.items.append(ReportItem(desc, UNDECIDED, witness))

    @property
    def status(self):
        if any(i.status == FAIL for i in self.items):
            return FAIL
        if any(i.status == UNDECIDED for i in self.items):
            return UNDECIDED
        return PASS

    @property
    def ok(self):
        return self.status == PASS

    def to_dict(self):
        return {
            "check": self.check_name,
            "status": self.status,
            "items": [
                {"desc": i.desc, "status": i.status, "witness": i.witness}
                for i in self.items
            ],
            "timing_ms": round(self.timing_ms, 3),
            "params": self.params,
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    def render(self):
        lines = [f"[{self.status.upper()}] {self.check_name}"]
        for i in self.items:
            mark = {"pass": "ok  ", "fail": "FAIL", "undecided": "??  "}[i.status]
            line = f"  {mark} {i.desc}"
            if i.witness and i.status != PASS:
                line += f"  [{i.witness}]"
            lines.append(line)
        return "\n".join(lines)


class timed:
    """Context manager stamping elapsed milliseconds onto a report."""

    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.timing_ms = (time.perf_counter() - self.t0) * 1000.0
        return False
