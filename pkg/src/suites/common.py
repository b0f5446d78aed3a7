# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Helpers shared by the suites."""

from typing import Any, Callable, Dict, Iterable, List, Optional, Type

from ..errors import PMMeasError
from ..models import CheckReport, CheckStatus


def detector(report: CheckReport, name: Optional[str] = None) -> CheckReport:
    """
    Turn a check run on a planted violation into a detector report, which
    passes when the violation was found.
    """
    return CheckReport(
        name=name or f"detects violation: {report.name}",
        passed=not report.passed,
        checked=report.checked,
        witness=report.witness,
        details={"law": report.name},
        sampled=report.sampled,
        expected_failure=True,
    )


def expect_error(name: str, action: Callable[[], Any], error: Type[PMMeasError]) -> CheckReport:
    """Detector that passes when action() raises the given error."""
    try:
        action()
    except error as e:
        return CheckReport(name, True, 1, {"error_code": e.code, "error": e.message}, expected_failure=True)
    except PMMeasError as e:
        return CheckReport(name, False, 1, {"unexpected_error_code": e.code, "error": e.message},
                           expected_failure=True)
    return CheckReport(name, False, 1, {"error": "no error raised"}, expected_failure=True)


def all_of(name: str, outcomes: Iterable[Optional[Dict[str, Any]]], sampled: bool = False) -> CheckReport:
    """
    Report over per-instance outcomes, each None (holds) or a witness.

    The first witness is kept.
    """
    checked = 0
    witness = None
    for outcome in outcomes:
        checked += 1
        if outcome is not None and witness is None:
            witness = outcome
    return CheckReport(name, witness is None, checked, witness, sampled=sampled)


def merge_by_name(batches: Iterable[List[CheckReport]], prefix: str = "") -> List[CheckReport]:
    """Combine the per-instance reports of the same law, keeping first-seen order."""
    grouped: Dict[str, List[CheckReport]] = {}
    for batch in batches:
        for report in batch:
            grouped.setdefault(report.name, []).append(report)
    merged = []
    for name, reports in grouped.items():
        combined = CheckReport.combine(f"{prefix}{name}", reports)
        if any(r.status == CheckStatus.PRECONDITION_UNMET for r in reports):
            combined.status = CheckStatus.PRECONDITION_UNMET
        combined.expected_failure = any(r.expected_failure for r in reports)
        merged.append(combined)
    return merged
