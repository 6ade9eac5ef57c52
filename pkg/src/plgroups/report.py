"""Check results and deterministic verification reports.

Every verification in the package reports itemized ``CHECK <id> <status>
<witness>`` rows.  Witness text always carries exact rationals, never
floats, so a report can be re-checked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.status == PASS


def passed(check_id: str, witness: str = "") -> CheckResult:
    return CheckResult(check_id, PASS, witness)


def failed(check_id: str, witness: str = "") -> CheckResult:
    return CheckResult(check_id, FAIL, witness)


def skipped(check_id: str, witness: str = "") -> CheckResult:
    return CheckResult(check_id, SKIP, witness)


def result_for(check_id: str, ok: bool, witness: str = "") -> CheckResult:
    return CheckResult(check_id, PASS if ok else FAIL, witness)


@dataclass(frozen=True)
class CheckReport:
    rows: tuple[CheckResult, ...]
    verdict: str = ""

    def __post_init__(self):
        ids = [r.check_id for r in self.rows]
        if len(ids) != len(set(ids)):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate check ids: {dup}")

    @property
    def all_pass(self) -> bool:
        return all(r.status != FAIL for r in self.rows)

    @property
    def exit_code(self) -> int:
        return 0 if self.all_pass else 1

    def render_text(self) -> str:
        lines = []
        for r in self.rows:
            line = f"CHECK {r.check_id} {r.status}"
            if r.witness:
                line += f" {r.witness}"
            lines.append(line)
        if self.verdict:
            lines.append(f"RESULT {self.verdict}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "checks": [
                {"id": r.check_id, "status": r.status, "witness": r.witness}
                for r in self.rows
            ],
            "verdict": self.verdict,
            "exit": self.exit_code,
        }
