"""Violation reports returned by the axiom checkers."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    identity: str
    indices: tuple = ()
    detail: str = ""

    def to_json(self):
        out = {"identity": self.identity, "indices": list(self.indices)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    """A list of violated identities; an empty report means the object is valid."""

    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, identity, indices=(), detail=""):
        self.violations.append(Violation(identity, tuple(indices), detail))

    def extend(self, other: "Report", prefix: str = ""):
        for v in other.violations:
            name = f"{prefix}{v.identity}" if prefix else v.identity
            self.violations.append(Violation(name, v.indices, v.detail))
        return self

    def identities(self) -> set:
        return {v.identity for v in self.violations}

    def to_json(self):
        return {"valid": self.ok, "violations": [v.to_json() for v in self.violations]}

    def __repr__(self):
        if self.ok:
            return "Report(valid)"
        names = sorted(self.identities())
        return f"Report({len(self.violations)} violations: {', '.join(names)})"
