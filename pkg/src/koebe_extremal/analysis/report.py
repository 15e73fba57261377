"""Structured per-N verification results with a JSON round trip."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

__all__ = ["ReportEntry", "VerificationReport"]


@dataclass(frozen=True)
class ReportEntry:
    check: str
    n: int
    computed: float
    reference: float
    residual: float
    passed: bool
    seconds: float | None = None

    @property
    def key(self) -> tuple[str, int]:
        return self.check, self.n


def _num(x):
    return x if x is None or math.isfinite(x) else None


def _unnum(x):
    return math.nan if x is None else float(x)


@dataclass(frozen=True)
class VerificationReport:
    """Entries sorted by ``(check, n)`` plus the tolerance table they were judged by.

    An entry passes iff ``|residual| <= tolerances[check]``; a NaN residual fails.
    """

    entries: tuple[ReportEntry, ...]
    tolerances: dict

    @classmethod
    def build(cls, results, tolerances: dict) -> "VerificationReport":
        """Judge raw ``(check, n, computed, reference, residual, seconds)`` rows."""
        entries = []
        for check, n, computed, reference, residual, seconds in results:
            tol = tolerances[check]
            ok = bool(abs(residual) <= tol)
            entries.append(
                ReportEntry(check, int(n), float(computed), float(reference), float(residual), ok, seconds)
            )
        entries.sort(key=lambda e: e.key)
        return cls(tuple(entries), dict(sorted(tolerances.items())))

    def __post_init__(self):
        keys = [e.key for e in self.entries]
        if keys != sorted(keys):
            raise ValueError("entries must be sorted by (check, n)")
        for e in self.entries:
            if e.passed != bool(abs(e.residual) <= self.tolerances[e.check]):
                raise ValueError(f"pass flag of {e.key} disagrees with its tolerance")

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[ReportEntry]:
        return [e for e in self.entries if not e.passed]

    def get(self, check: str, n: int) -> ReportEntry:
        for e in self.entries:
            if e.key == (check, n):
                return e
        raise KeyError((check, n))

    def to_dict(self, timing: bool = False) -> dict:
        rows = []
        for e in self.entries:
            row = {
                "check": e.check,
                "n": e.n,
                "computed": _num(e.computed),
                "reference": _num(e.reference),
                "residual": _num(e.residual),
                "pass": e.passed,
            }
            if timing and e.seconds is not None:
                row["seconds"] = e.seconds
            rows.append(row)
        return {
            "tolerances": dict(sorted(self.tolerances.items())),
            "summary": {"entries": len(rows), "failed": len(self.failures), "pass": self.passed},
            "entries": rows,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        entries = tuple(
            ReportEntry(
                row["check"],
                int(row["n"]),
                _unnum(row["computed"]),
                _unnum(row["reference"]),
                _unnum(row["residual"]),
                bool(row["pass"]),
                row.get("seconds"),
            )
            for row in data["entries"]
        )
        return cls(entries, {k: float(v) for k, v in data["tolerances"].items()})

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))
