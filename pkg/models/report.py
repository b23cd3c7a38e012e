"""
Verification Report Models
Per-check records and suite reports emitted by the verification harness
"""

from enum import Enum
from typing import Any, Optional
from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    """Outcome of a single check"""
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class CheckRecord(BaseModel):
    """
    One verified identity, rank or lattice statement
    A failing record always carries a witness
    """
    id: str
    status: CheckStatus
    detail: Optional[str] = None
    witness: Optional[Any] = None
    data: dict[str, Any] = Field(default_factory=dict)
    timing_ms: Optional[float] = None


class Report(BaseModel):
    """Report of one suite run"""
    suite: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckRecord] = Field(default_factory=list)

    @property
    def status(self) -> CheckStatus:
        statuses = {c.status for c in self.checks}
        if CheckStatus.FAIL in statuses:
            return CheckStatus.FAIL
        if CheckStatus.INCONCLUSIVE in statuses:
            return CheckStatus.INCONCLUSIVE
        return CheckStatus.PASS

    def add(self, record: CheckRecord) -> CheckRecord:
        self.checks.append(record)
        return record

    def extend(self, records: list[CheckRecord]) -> None:
        self.checks.extend(records)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    def to_json_dict(self, with_timings: bool = False) -> dict[str, Any]:
        exclude: set[str] = set() if with_timings else {'timing_ms'}
        return {
            'suite': self.suite,
            'status': self.status.value,
            'parameters': self.parameters,
            'checks': [
                c.model_dump(mode='json', exclude=exclude, exclude_none=True)
                for c in self.checks
            ],
        }


class AggregateReport(BaseModel):
    """Reports of several suites, in canonical suite order"""
    reports: list[Report] = Field(default_factory=list)

    @property
    def status(self) -> CheckStatus:
        statuses = {r.status for r in self.reports}
        if CheckStatus.FAIL in statuses:
            return CheckStatus.FAIL
        if CheckStatus.INCONCLUSIVE in statuses:
            return CheckStatus.INCONCLUSIVE
        return CheckStatus.PASS

    def to_json_dict(self, with_timings: bool = False) -> dict[str, Any]:
        return {
            'status': self.status.value,
            'suites': [r.to_json_dict(with_timings) for r in self.reports],
        }


def exit_code_for(status: CheckStatus) -> int:
    """0 pass, 1 any failure, 4 inconclusive only"""
    return {CheckStatus.PASS: 0, CheckStatus.FAIL: 1, CheckStatus.INCONCLUSIVE: 4}[status]
