"""Structured pass/fail records shared by the verification checks and the CLI."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "skipped")


@dataclass
class CheckReport:
    check: str
    params: dict = field(default_factory=dict)
    status: str = "pass"
    witness: object = None
    ms: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        d = {"check": self.check, "params": self.params, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if timing:
            d["ms"] = round(self.ms, 3)
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def sort_key(self):
        return (self.check, json.dumps(self.params, sort_keys=True))


@contextmanager
def timed(report: CheckReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.ms = (time.perf_counter() - start) * 1000


def outcome(check: str, params: dict, witness=None) -> CheckReport:
    """Report that passes iff ``witness`` is None."""
    return CheckReport(check, params, "pass" if witness is None else "fail", witness)
