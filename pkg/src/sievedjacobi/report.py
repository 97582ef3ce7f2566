"""Uniform result record for the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one verification suite.

    details holds one dict per sub-check, at minimum {"name", "residual"};
    pass/fail is derived from max_residual against the tolerance so the two
    can never disagree.
    """

    suite: str
    params: dict
    tolerance: float
    max_residual: float
    seed: int | None = None
    details: list = field(default_factory=list)

    @property
    def passed(self):
        return self.max_residual <= self.tolerance

    def to_dict(self):
        return {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "max_residual": self.max_residual,
            "pass": self.passed,
            "details": self.details,
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, default=_encode)

    def summary_line(self):
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.suite}: max residual {self.max_residual:.3e}"
            f" (tolerance {self.tolerance:.1e})"
        )


def _encode(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    raise TypeError(f"cannot serialize {type(v)}")


def combine(suite, params, tolerance, reports_or_details, seed=None):
    """Fold sub-check dicts (or nested reports) into one CheckReport."""
    details = []
    worst = 0.0
    for item in reports_or_details:
        if isinstance(item, CheckReport):
            details.append(item.to_dict())
            worst = max(worst, item.max_residual)
        else:
            details.append(item)
            worst = max(worst, item["residual"])
    return CheckReport(
        suite=suite,
        params=params,
        tolerance=tolerance,
        max_residual=worst,
        seed=seed,
        details=details,
    )
