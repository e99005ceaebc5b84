"""Certificate reports: named exact checks with JSON and text renderings."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List


def render(value: Any) -> Any:
    """JSON-ready form: rationals become ``p/q`` strings, plain integers stay numbers."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(render(k)): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [render(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, "tolist"):
        return render(value.tolist())
    return str(value)


@dataclass
class Check:
    name: str
    anchor: str
    expected: Any
    actual: Any
    passed: bool
    detail: str = ""

    def as_dict(self) -> Dict[str, Any]:
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "expected": render(self.expected),
            "actual": render(self.actual),
            "pass": self.passed,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CertificateReport:
    title: str
    checks: List[Check] = field(default_factory=list)
    annotations: List[str] = field(default_factory=list)
    records: Dict[str, Any] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, anchor: str, expected, actual, passed=None, detail: str = "") -> Check:
        """Record an exact comparison; ``passed`` defaults to ``expected == actual``."""
        ok = (expected == actual) if passed is None else bool(passed)
        c = Check(name, anchor, expected, actual, ok, detail)
        self.checks.append(c)
        return c

    def fail(self, name: str, anchor: str, expected, error: BaseException) -> Check:
        return self.check(name, anchor, expected, f"{type(error).__name__}: {error}", passed=False)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> List[str]:
        return [c.name for c in self.checks]

    @contextmanager
    def timed(self, label: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = round(time.perf_counter() - t0, 3)

    def as_dict(self, timings: bool = True) -> Dict[str, Any]:
        out = {
            "title": self.title,
            "checks": [c.as_dict() for c in self.checks],
            "annotations": list(self.annotations),
            "records": render(self.records),
            "pass": self.passed,
        }
        if timings:
            out["timings"] = dict(self.timings)
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.as_dict(timings), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [self.title, "=" * len(self.title)]
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name:<{width}}  expected {render(c.expected)}  got {render(c.actual)}")
            if c.detail:
                lines.append(f"       {c.detail}")
        if self.records:
            lines.append("")
            lines.append("records:")
            for k, v in self.records.items():
                lines.append(f"  {k}: {render(v)}")
        if self.annotations:
            lines.append("")
            lines.append("annotations:")
            lines += [f"  - {a}" for a in self.annotations]
        lines.append("")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({sum(c.passed for c in self.checks)}/{len(self.checks)})")
        return "\n".join(lines) + "\n"
