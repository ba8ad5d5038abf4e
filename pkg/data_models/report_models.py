"""
Verification report types
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class VerificationCase:
    """
    One checked claim at one size.

    `passed` is decided by exact integer or set comparison. `notes` carries
    informational findings that do not affect the verdict, such as whether a
    printed bound that the harness replaced also held.
    """

    suite: str
    check: str
    n: int
    m: int
    kind: str
    measured: Dict[str, Any]
    expected: Dict[str, Any]
    passed: bool
    notes: Tuple[str, ...] = ()

    @property
    def key(self) -> Tuple[str, str, int, int]:
        return (self.suite, self.check, self.n, self.m)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "check": self.check,
            "n": self.n,
            "m": self.m,
            "kind": self.kind,
            "measured": self.measured,
            "expected": self.expected,
            "pass": self.passed,
            "notes": list(self.notes),
        }


@dataclass
class VerificationReport:
    cases: List[VerificationCase] = field(default_factory=list)

    @classmethod
    def merge(cls, reports: Iterable["VerificationReport"]) -> "VerificationReport":
        """Combine reports, ordering cases by (suite, check, n, m)"""
        cases = [case for report in reports for case in report.cases]
        cases.sort(key=lambda case: case.key)
        return cls(cases)

    def add(self, case: VerificationCase) -> None:
        self.cases.append(case)

    @property
    def passed_count(self) -> int:
        return sum(1 for case in self.cases if case.passed)

    @property
    def failed_count(self) -> int:
        return sum(1 for case in self.cases if not case.passed)

    @property
    def all_passed(self) -> bool:
        return self.failed_count == 0

    def failures(self) -> List[VerificationCase]:
        return [case for case in self.cases if not case.passed]

    def find(self, check: str, n: Optional[int] = None, m: Optional[int] = None) -> List[VerificationCase]:
        return [
            case for case in self.cases
            if case.check == check and (n is None or case.n == n) and (m is None or case.m == m)
        ]

    def summary(self) -> Dict[str, int]:
        return {"passed": self.passed_count, "failed": self.failed_count, "total": len(self.cases)}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cases": [case.to_dict() for case in self.cases],
            "summary": self.summary(),
        }
