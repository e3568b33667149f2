"""Verdict records produced by the invariant checkers"""

import json
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field
from rich.table import Table


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


class CheckResult(BaseModel):
    """Outcome of one check"""

    check_id: str
    status: CheckStatus
    witness: str = ""


class InvariantReport(BaseModel):
    """Ordered list of check outcomes for one graph or catalog"""

    subject: Optional[str] = Field(default=None, description="graph6 string or catalog label")
    entries: List[CheckResult] = Field(default_factory=list)

    def record(self, check_id: str, ok: bool, witness: str = "") -> CheckResult:
        """Add a pass/fail verdict

        Args:
            check_id: Stable identifier of the check
            ok: Whether the property holds
            witness: Values that justify the verdict
        """
        result = CheckResult(
            check_id=check_id,
            status=CheckStatus.PASS if ok else CheckStatus.FAIL,
            witness=witness,
        )
        self.entries.append(result)
        return result

    def not_applicable(self, check_id: str, reason: str) -> CheckResult:
        result = CheckResult(check_id=check_id, status=CheckStatus.NOT_APPLICABLE, witness=reason)
        self.entries.append(result)
        return result

    def extend(self, other: "InvariantReport") -> "InvariantReport":
        self.entries.extend(other.entries)
        return self

    @property
    def failures(self) -> List[CheckResult]:
        return [e for e in self.entries if e.status == CheckStatus.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def status_of(self, check_id: str) -> Optional[CheckStatus]:
        for entry in self.entries:
            if entry.check_id == check_id:
                return entry.status
        return None

    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for entry in self.entries:
            counts[entry.status.value] += 1
        return counts

    def to_json(self) -> str:
        """JSON list of ``{check_id, status, witness}`` records"""
        return json.dumps([entry.model_dump(mode="json") for entry in self.entries])

    def to_table(self) -> Table:
        """Human-readable table for the console"""
        title = f"Invariants: {self.subject}" if self.subject else "Invariants"
        table = Table(title=title)
        table.add_column("check")
        table.add_column("status")
        table.add_column("witness", overflow="fold")

        styles = {
            CheckStatus.PASS: "green",
            CheckStatus.FAIL: "bold red",
            CheckStatus.NOT_APPLICABLE: "dim",
        }
        for entry in self.entries:
            table.add_row(entry.check_id, f"[{styles[entry.status]}]{entry.status.value}[/]", entry.witness)
        return table
