"""Verification report models."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from deltabound.models.values import ExactModel, Rational


class ReportStatus(str, Enum):
    """Outcome of a verification run."""

    CERTIFIED = "certified modulo listed assumptions"
    REJECTED = "rejected"
    MISMATCH = "mismatch"


class AssumptionRecord(BaseModel):
    """A geometric fact the arithmetic conclusion rests on."""

    tag: str
    citation: str
    piece: Optional[str] = None


class CheckRecord(BaseModel):
    """One comparison between a computed value and a stored one."""

    name: str
    expected: str
    observed: str
    passed: bool


class VerificationReport(ExactModel):
    """Arithmetic identities verified, assumptions carried, and the conclusion."""

    subject: str
    status: ReportStatus = ReportStatus.CERTIFIED
    identities: List[str] = Field(default_factory=list)
    assumptions: List[AssumptionRecord] = Field(default_factory=list)
    checks: List[CheckRecord] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    conclusion: Optional[str] = None
    value: Optional[Rational] = None

    @property
    def matches(self) -> List[CheckRecord]:
        return [c for c in self.checks if c.passed]

    @property
    def mismatches(self) -> List[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return self.status == ReportStatus.CERTIFIED and not self.mismatches

    def to_summary(self) -> str:
        """Short human-readable summary."""
        lines = [f"{self.subject}: {self.status.value}"]
        if self.conclusion:
            lines.append(f"  conclusion: {self.conclusion}")
        for check in self.checks:
            mark = "ok" if check.passed else "MISMATCH"
            lines.append(f"  [{mark}] {check.name}: expected {check.expected}, got {check.observed}")
        for a in self.assumptions:
            lines.append(f"  assumes {a.tag}: {a.citation}")
        return "\n".join(lines)
