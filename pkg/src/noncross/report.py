"""Check results and their renderings.

Every verification routine reports a CheckResult; suites return lists of
them. The JSON rendering is the machine-readable CI artifact, the text
rendering is for humans. Output never contains timing information so that
identical inputs produce byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    check: str
    params: dict = field(default_factory=dict)
    status: str = "pass"
    lhs: str | None = None
    rhs: str | None = None
    location: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "location": self.location,
        }


def passed(check: str, params: dict | None = None) -> CheckResult:
    return CheckResult(check=check, params=params or {})


def failed(
    check: str,
    params: dict | None = None,
    lhs: object = None,
    rhs: object = None,
    location: str | None = None,
) -> CheckResult:
    return CheckResult(
        check=check,
        params=params or {},
        status="fail",
        lhs=None if lhs is None else str(lhs),
        rhs=None if rhs is None else str(rhs),
        location=location,
    )


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)


def render_json(results: list[CheckResult]) -> str:
    return json.dumps([r.to_dict() for r in results], indent=2, sort_keys=False)


def render_csv(results: list[CheckResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check", "params", "status", "lhs", "rhs", "location"])
    for r in results:
        writer.writerow(
            [
                r.check,
                json.dumps(r.params, sort_keys=True),
                r.status,
                r.lhs or "",
                r.rhs or "",
                r.location or "",
            ]
        )
    return buf.getvalue()


def render_text(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        detail = json.dumps(r.params, sort_keys=True) if r.params else ""
        line = f"[{tag}] {r.check} {detail}".rstrip()
        if not r.passed:
            where = f" at {r.location}" if r.location else ""
            line += f"{where}: lhs={r.lhs} rhs={r.rhs}"
        lines.append(line)
    n_fail = sum(1 for r in results if not r.passed)
    if n_fail:
        lines.append(f"{n_fail} of {len(results)} checks FAILED")
    else:
        lines.append(f"all {len(results)} checks passed")
    return "\n".join(lines) + "\n"
