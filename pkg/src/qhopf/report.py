"""Check records and suite reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .coeffring import fmt_rational, parse_rational
from .ncalg import Element


@dataclass
class CheckRecord:
    name: str
    anchor: str
    residual: list = field(default_factory=list)
    ms: int = 0
    detail: dict = field(default_factory=dict)
    failing_orders: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.residual and not self.detail.get("error")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def first_failing_order(self):
        return self.failing_orders[0] if self.failing_orders else None

    def as_json(self) -> dict:
        out = {"name": self.name, "anchor": self.anchor, "status": self.status,
               "residual": self.residual, "ms": self.ms}
        if self.detail:
            out["detail"] = self.detail
        return out


def _pq(c) -> str:
    """Coefficient as a "p/q" string."""
    try:
        return fmt_rational(parse_rational(str(c)))
    except (ValueError, ZeroDivisionError):
        return str(c)


def residual_record(name: str, anchor: str, residual, ms: int = 0, **detail) -> CheckRecord:
    """Build a record from a residual Element (or a ready list of term records)."""
    if isinstance(residual, Element):
        terms = residual.term_records()
        orders = residual.orders()
    elif residual is None:
        terms, orders = [], []
    else:
        terms = [[t[0], _pq(t[1])] + list(t[2:]) for t in residual]
        orders = sorted({t[2] for t in terms if len(t) > 2}) if terms and len(terms[0]) > 2 else []
    return CheckRecord(name, anchor, terms, ms, dict(detail), orders)


class timed:
    """Context manager measuring wall time in milliseconds."""

    def __enter__(self):
        self._t0 = time.perf_counter()
        self.ms = 0
        return self

    def __exit__(self, *exc):
        self.ms = int(1000 * (time.perf_counter() - self._t0))
        return False


def check(name: str, anchor: str, fn, **detail) -> CheckRecord:
    with timed() as t:
        res = fn()
    rec = residual_record(name, anchor, res, **detail)
    rec.ms = t.ms
    return rec


@dataclass
class SuiteReport:
    suite: str
    model: str
    order: int
    degree: int | None
    mu: str
    checks: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def extend(self, records):
        self.checks.extend(records)

    def as_json(self, timing: bool = True) -> dict:
        checks = []
        for c in self.checks:
            d = c.as_json()
            if not timing:
                d["ms"] = 0
            checks.append(d)
        out = {"suite": self.suite, "model": self.model, "order": self.order,
               "degree": self.degree, "mu": self.mu, "checks": checks}
        if self.extra:
            out["extra"] = self.extra
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_json(timing), sort_keys=True, indent=1)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  model {self.model}  N={self.order}  D={self.degree}  mu={self.mu}"]
        for c in self.checks:
            line = f"  [{c.status.upper()}] {c.name}  ({c.anchor}, {c.ms} ms)"
            if not c.passed:
                line += f"  {len(c.residual)} residual terms"
                if c.first_failing_order is not None:
                    line += f", first failing order {c.first_failing_order}"
            lines.append(line)
        for key in sorted(self.extra):
            lines.append(f"  {key}: {self.extra[key]}")
        lines.append(f"PASS (verified through order {self.order})" if self.passed else "FAIL")
        return "\n".join(lines)
