"""Suite reports: the one JSON artifact every verification run produces.

A report is deterministic for a fixed spec and seed except for the
``timing`` key, which isolates wall-clock data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class ConfigReport:
    suite: str
    descriptor: dict
    cases_run: int
    cases_passed: int
    cases_failed: int
    cases_skipped_degenerate: int
    tolerances: dict
    worst_residual: Optional[float] = None
    witnesses: List[dict] = field(default_factory=list)
    seed: Optional[int] = None
    timing: dict = field(default_factory=dict)

    def __post_init__(self):
        total = self.cases_passed + self.cases_failed + self.cases_skipped_degenerate
        if total != self.cases_run:
            raise ValueError(
                f"report counts inconsistent: {self.cases_passed}+{self.cases_failed}"
                f"+{self.cases_skipped_degenerate} != {self.cases_run}"
            )

    @property
    def passed(self) -> bool:
        return self.cases_failed == 0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "descriptor": self.descriptor,
            "counts": {
                "run": self.cases_run,
                "passed": self.cases_passed,
                "failed": self.cases_failed,
                "skipped_degenerate": self.cases_skipped_degenerate,
            },
            "worst_residual": self.worst_residual,
            "tolerances": self.tolerances,
            "witnesses": self.witnesses,
            "seed": self.seed,
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        residual = (
            "exact" if self.worst_residual is None else f"worst residual {self.worst_residual:.3e}"
        )
        return (
            f"[{status}] {self.suite}: {self.cases_passed}/{self.cases_run} passed, "
            f"{self.cases_skipped_degenerate} degenerate skipped, {residual}"
        )
