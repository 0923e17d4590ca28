"""Check reports: per-check records rendered as aligned text or stable JSON.

Every executed check appears exactly once; the exit code contract is
0 when nothing failed (skips allowed), 1 when any check failed, and the
CLI reserves 2 for input errors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


def plain(value):
    """Recursively convert report values into JSON-serializable data.

    Fractions become ints when integral and 'p/q' strings otherwise; tuples
    become lists; anything unknown is stringified.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return str(value)


@dataclass
class CheckRecord:
    name: str
    status: str
    summary: str = ""
    detail: dict = field(default_factory=dict)


class Report:
    def __init__(self, command: str, spec: Optional[dict] = None,
                 seed: Optional[int] = None):
        self.command = command
        self.spec = spec or {}
        self.seed = seed
        self.checks: list[CheckRecord] = []
        self.notes: list[str] = []

    def add(self, name: str, status: str, summary: str = "",
            **detail) -> CheckRecord:
        if status not in (PASS, FAIL, SKIP):
            raise ValueError(f"unknown status {status!r}")
        record = CheckRecord(name, status, summary, detail)
        self.checks.append(record)
        return record

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_dict(self) -> dict:
        return {
            "tool": "downup",
            "command": self.command,
            "seed": self.seed,
            "spec": plain(self.spec),
            "checks": [
                {"name": c.name, "status": c.status, "summary": c.summary,
                 "detail": plain(c.detail)}
                for c in self.checks
            ],
            "notes": list(self.notes),
            "ok": self.ok,
        }

    def render_text(self) -> str:
        lines = [f"downup {self.command}"]
        if self.spec:
            lines.append("  spec: " + json.dumps(plain(self.spec)))
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            lines.append(f"  {c.name.ljust(width)}  {c.status.upper():<4}  {c.summary}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        lines.append("result: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "machine":
            return json.dumps(self.to_dict(), indent=2)
        return self.render_text()
