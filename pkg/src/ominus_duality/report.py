from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator


@dataclass(frozen=True)
class Check:
    """Verdict for one named property, with the first witness on failure."""

    name: str
    ok: bool
    witness: Any = None
    detail: str = ""

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "ok": self.ok}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class Report:
    title: str
    checks: tuple[Check, ...]
    extras: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def to_dict(self) -> dict:
        out = {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}
        if self.extras:
            out["extras"] = _jsonable(self.extras)
        return out

    def format(self) -> str:
        lines = [f"{self.title}: {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            mark = "pass" if c.ok else "FAIL"
            line = f"  [{mark}] {c.name}"
            if not c.ok and c.witness is not None:
                line += f"  witness={c.witness}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        return "\n".join(lines)


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    return value


def merge(title: str, *reports: Report, prefix: bool = True) -> Report:
    checks = []
    for r in reports:
        for c in r.checks:
            name = f"{r.title}.{c.name}" if prefix else c.name
            checks.append(Check(name, c.ok, c.witness, c.detail))
    return Report(title, tuple(checks))
