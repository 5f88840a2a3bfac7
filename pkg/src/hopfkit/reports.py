"""Machine-readable check reports shared by every module.

A :class:`Report` is a named verdict (``pass`` / ``fail`` / ``undecided``) with an
ordered list of sub-checks and a dictionary of exact witnesses.  Witness values are
converted to strings with the field's canonical formatting so that JSON output is
byte-identical across runs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

__all__ = ["Report", "ValidationReport", "Undecided", "PreconditionFailed", "to_jsonable"]

PASS, FAIL, UNDECIDED = "pass", "fail", "undecided"


class Undecided(Exception):
    """A computation could not reach a verdict over the chosen base field."""


class PreconditionFailed(ValueError):
    pass


def to_jsonable(value: Any, fmt=None) -> Any:
    """Recursively convert witnesses into JSON-safe values.

    ``fmt`` formats raw field values; integers and strings pass through unchanged.
    """
    from .exactfield import Scalar

    if isinstance(value, Scalar):
        return str(value)
    if isinstance(value, Report):
        return value.to_dict()
    if isinstance(value, np.ndarray):
        return [to_jsonable(v, fmt) for v in value.tolist()] if value.ndim > 1 else [
            _scalar(v, fmt) for v in value.tolist()
        ]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v, fmt) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v, fmt) for v in value]
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    return _scalar(value, fmt)


def _scalar(v, fmt):
    if isinstance(v, (bool, str)) or v is None:
        return v
    if fmt is not None:
        return fmt(v)
    return str(v)


@dataclass
class Report:
    check: str
    items: list[dict] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    undecided: bool = False
    fmt: Any = field(default=None, repr=False, compare=False)

    def add(self, name: str, passed: bool, witness: Any = None) -> bool:
        entry = {"name": name, "passed": bool(passed)}
        if witness is not None:
            entry["witness"] = to_jsonable(witness, self.fmt)
        self.items.append(entry)
        return bool(passed)

    def witness(self, key: str, value: Any) -> None:
        self.witnesses[key] = to_jsonable(value, self.fmt)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def include(self, other: "Report", prefix: str | None = None) -> bool:
        """Fold a sub-report in as a single item carrying its details."""
        name = prefix or other.check
        entry = {"name": name, "passed": other.passed, "report": other.to_dict()}
        self.items.append(entry)
        if other.undecided:
            self.undecided = True
        return other.passed

    @property
    def failures(self) -> list[dict]:
        return [it for it in self.items if not it["passed"]]

    @property
    def passed(self) -> bool:
        return not self.undecided and not self.failures

    @property
    def verdict(self) -> str:
        if self.failures:
            return FAIL
        if self.undecided:
            return UNDECIDED
        return PASS

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {"check": self.check, "verdict": self.verdict, "items": self.items}
        if self.witnesses:
            out["witnesses"] = self.witnesses
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def summary(self) -> str:
        lines = [f"{self.check}: {self.verdict.upper()}"]
        for it in self.items:
            mark = "ok " if it["passed"] else "FAIL"
            lines.append(f"  [{mark}] {it['name']}")
        return "\n".join(lines)


class ValidationReport(Report):
    """Report returned by Hopf-axiom validation; ``failures`` lists failed axioms."""
