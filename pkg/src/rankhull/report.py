from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CommandReport:
    """What a CLI command did and which properties it verified."""

    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, Any] = field(default_factory=dict)
    checks: list[dict[str, Any]] = field(default_factory=list)

    def check(self, name: str, passed: bool, detail: Any = "") -> bool:
        self.checks.append({"name": name, "passed": bool(passed), "detail": detail})
        return bool(passed)

    @property
    def ok(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def failing(self) -> list[str]:
        return [c["name"] for c in self.checks if not c["passed"]]

    def to_json(self) -> dict[str, Any]:
        return {"command": self.command, "inputs": self.inputs, "outputs": self.outputs, "checks": self.checks}
