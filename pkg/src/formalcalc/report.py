"""Result record for the identity-sweep checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an exhaustive or randomized identity sweep.

    ``cases`` counts the individual equalities checked; on failure
    ``counterexample`` describes the first offending instance.
    """

    check: str
    passed: bool
    cases: int
    counterexample: str | None = None

    def summary(self) -> str:
        if self.passed:
            return f"{self.check}: pass ({self.cases} cases)"
        return f"{self.check}: FAIL after {self.cases} cases ({self.counterexample})"
