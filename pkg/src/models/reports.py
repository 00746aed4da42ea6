"""
Embedded Trees Verification Reports
Pydantic models for suite parameters, per-case outcomes and whole-suite reports
"""

import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, computed_field


class SuiteRanges(BaseModel):
    """Parameter ranges a suite was run over; unset fields take the suite defaults"""
    model_config = ConfigDict(extra="forbid")

    n_max: Optional[int] = None
    j_min: Optional[int] = None
    j_max: Optional[int] = None
    m_max: Optional[int] = None
    d: Optional[int] = None
    k_max: Optional[int] = None
    order: Optional[int] = None
    marked_order: Optional[int] = None
    marked_j_max: Optional[int] = None
    lambda_degree: Optional[int] = None
    points: Optional[List[float]] = None
    workers: Optional[int] = None

    def merged(self, defaults: Dict[str, Any]) -> "SuiteRanges":
        values = {k: v for k, v in defaults.items() if k in SuiteRanges.model_fields}
        values.update(self.model_dump(exclude_none=True))
        return SuiteRanges(**values)


class CaseResult(BaseModel):
    """One compared case: exact values are carried as strings"""
    case: Dict[str, Any]
    status: Literal["match", "mismatch"]
    expected: Optional[str] = None
    actual: Optional[str] = None
    witness: Optional[str] = None
    detail: Optional[str] = None

    @classmethod
    def match(cls, case: Dict[str, Any], value: Any = None, detail: Optional[str] = None) -> "CaseResult":
        text = None if value is None else str(value)
        return cls(case=case, status="match", expected=text, actual=text, detail=detail)

    @classmethod
    def mismatch(cls, case: Dict[str, Any], expected: Any, actual: Any,
                 witness: Optional[str] = None, detail: Optional[str] = None) -> "CaseResult":
        return cls(case=case, status="mismatch", expected=str(expected), actual=str(actual),
                   witness=witness, detail=detail)

    @classmethod
    def compare(cls, case: Dict[str, Any], expected: Any, actual: Any,
                witness: Optional[str] = None) -> "CaseResult":
        if expected == actual:
            return cls.match(case, actual)
        return cls.mismatch(case, expected, actual, witness)

    @property
    def ok(self) -> bool:
        return self.status == "match"


class VerificationReport(BaseModel):
    suite: str
    ranges: SuiteRanges
    cases: List[CaseResult] = []
    elapsed_seconds: float = 0.0
    informational: bool = False
    notes: List[str] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(case.ok for case in self.cases)

    @property
    def mismatches(self) -> List[CaseResult]:
        return [case for case in self.cases if not case.ok]

    @property
    def gates(self) -> bool:
        """Whether a mismatch here should fail the run"""
        return not self.informational

    def to_text(self) -> str:
        status = "PASS" if self.passed else ("REPORT" if self.informational else "FAIL")
        ranges = ", ".join(f"{k}={v}" for k, v in self.ranges.model_dump(exclude_none=True).items())
        lines = [f"{self.suite}: {status} ({len(self.cases) - len(self.mismatches)}/{len(self.cases)} cases"
                 f" in {self.elapsed_seconds:.2f}s) [{ranges}]"]
        for case in self.mismatches:
            params = ", ".join(f"{k}={v}" for k, v in case.case.items())
            line = f"  mismatch {params}: expected {case.expected}, got {case.actual}"
            if case.witness:
                line += f", witness {case.witness}"
            lines.append(line)
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)


class _Clock:
    elapsed: float = 0.0


@contextmanager
def timed() -> Iterator[_Clock]:
    clock = _Clock()
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock.elapsed = time.perf_counter() - start
