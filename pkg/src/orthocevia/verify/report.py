"""Trial and suite reports, plus their JSON form."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class Check:
    """One named measurement compared against a bound.

    ``op`` is ``"le"`` (value must not exceed bound) or ``"ge"``. A check with
    ``hard=False`` never fails its trial; the suite instead requires it to hold
    on at least a fraction of trials (see :attr:`Suite.rates`).
    """

    name: str
    value: float
    bound: float
    op: str = "le"
    hard: bool = True

    @property
    def ok(self) -> bool:
        if self.op == "le":
            return self.value <= self.bound
        return self.value >= self.bound


@dataclass
class TrialReport:
    trial_index: int
    inputs: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    skipped: Optional[str] = None

    @property
    def residuals(self) -> dict[str, float]:
        return {c.name: c.value for c in self.checks}

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks if c.hard)

    def to_dict(self) -> dict[str, Any]:
        return {
            "trial_index": self.trial_index,
            "inputs": self.inputs,
            "residuals": self.residuals,
            "thresholds": {c.name: [c.op, c.bound] for c in self.checks},
            "passed": self.passed,
        }


@dataclass
class SuiteReport:
    suite: str
    config: dict[str, Any]
    trials: int
    failures: list[TrialReport]
    max_residuals: dict[str, float]
    min_values: dict[str, float]
    rates: dict[str, dict[str, Any]]
    skips: dict[str, int]
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and all(r["ok"] for r in self.rates.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "config": self.config,
            "trials": self.trials,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "max_residuals": self.max_residuals,
            "min_values": self.min_values,
            "rates": self.rates,
            "skips": self.skips,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    text = f"{x:.17g}"
    if "e" not in text and "." not in text:
        text += ".0"
    return text


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with floats at 17 significant digits and sorted keys.

    Non-finite floats become the strings ``"inf"``, ``"-inf"`` and ``"nan"``.
    """
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}"
                 for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
