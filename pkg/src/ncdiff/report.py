"""Check records and their stable JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import Mod

STATUSES = ("pass", "fail", "recorded")


@dataclass
class Check:
    id: str
    status: str
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError("unknown status %r" % self.status)


def verdict(check_id, ok, **data) -> Check:
    return Check(check_id, "pass" if ok else "fail", data)


def recorded(check_id, **data) -> Check:
    return Check(check_id, "recorded", data)


@dataclass
class Report:
    command: list
    checks: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)

    @property
    def exit_code(self):
        return 1 if any(c.status == "fail" for c in self.checks) else 0

    def to_obj(self):
        checks = sorted(self.checks, key=lambda c: c.id)
        return plain({"command": self.command,
                      "checks": [{"id": c.id, "status": c.status, "data": c.data} for c in checks],
                      "tables": self.tables,
                      "exit": self.exit_code})

    def to_json(self):
        return json.dumps(self.to_obj(), indent=2, sort_keys=True) + "\n"

    def to_text(self):
        lines = ["command: " + " ".join(self.command)]
        for key in sorted(self.tables):
            lines.append("%s: %s" % (key, json.dumps(plain(self.tables[key]), sort_keys=True)))
        for c in sorted(self.checks, key=lambda c: c.id):
            extra = json.dumps(plain(c.data), sort_keys=True) if c.data else ""
            lines.append("%-8s %s %s" % (c.status, c.id, extra))
        lines.append("exit: %d" % self.exit_code)
        return "\n".join(lines) + "\n"


def plain(x):
    """Turn exact scalars and containers into JSON-ready values."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Mod):
        return x.value
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    if isinstance(x, float):
        raise TypeError("floats are not allowed in reports")
    return str(x)
