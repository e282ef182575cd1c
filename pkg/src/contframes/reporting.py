"""Structured records for verification runs.

A report is a list of checks, each carrying an identifier, a one-line
statement of the verified relation, the measured value, the budget or
expected value it is held against, the tolerance and the verdict.  Reports
serialize to JSON (checks sorted by identifier, so reruns with one seed are
byte-identical apart from timestamps) and to CSV.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    check_id: str
    claim: str
    measured: float
    budget: float
    tolerance: float
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        out = {
            "check_id": self.check_id,
            "claim": self.claim,
            "measured": self.measured,
            "budget": self.budget,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
        if self.detail:
            out["detail"] = self.detail
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Check":
        return cls(
            check_id=data["check_id"],
            claim=data.get("claim", ""),
            measured=data["measured"],
            budget=data["budget"],
            tolerance=data["tolerance"],
            passed=data["pass"],
            detail=data.get("detail", ""),
        )


@dataclass
class Report:
    suite: str
    seed: int
    started: str = ""
    finished: str = ""
    checks: list[Check] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        return {
            "total": len(self.checks),
            "passed": sum(1 for c in self.checks if c.passed),
        }

    @property
    def all_passed(self) -> bool:
        return self.summary["passed"] == self.summary["total"]

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.check_id)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "started": self.started,
            "finished": self.finished,
            "checks": [c.to_dict() for c in self.sorted_checks()],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["check_id", "claim", "measured", "budget",
                         "tolerance", "pass"])
        for c in self.sorted_checks():
            writer.writerow([c.check_id, c.claim, repr(c.measured),
                             repr(c.budget), repr(c.tolerance),
                             "true" if c.passed else "false"])
        return out.getvalue()

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(
            suite=data["suite"],
            seed=data["seed"],
            started=data.get("started", ""),
            finished=data.get("finished", ""),
            checks=[Check.from_dict(c) for c in data["checks"]],
        )
