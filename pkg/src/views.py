# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""
Report builders: the JSON verification report, explore reports and the
CSV plot data.
"""

import json
import os
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import SuiteConfig
from .errors import IoFailureError
from .logger import logger
from .models import SuiteResult
from .utils import format_duration, format_timestamp, truncate_text

SCHEMA_VERSION = "1.0"


def build_report(config: SuiteConfig, results: Sequence[SuiteResult], elapsed: Optional[float] = None) -> Dict[str, Any]:
    """
    Assemble the verification report.

    Everything except `timing` is a pure function of the configuration.
    """
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config.to_dict(),
        "claims": {r.name: r.claim for r in results},
        "suites": [r.to_dict() for r in results],
        "passed": all(r.passed for r in results),
        "timing": {
            "generated_at": format_timestamp(),
            "total_seconds": elapsed if elapsed is not None else sum(r.elapsed for r in results),
            "suites": {r.name: r.elapsed for r in results},
        },
    }


def build_explore_report(mode: str, seed: int, budget: int, result: Dict[str, Any],
                         elapsed: Optional[float] = None) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "mode": mode,
        "seed": seed,
        "budget": budget,
        "result": result,
        "timing": {"generated_at": format_timestamp(), "total_seconds": elapsed},
    }


def strip_timing(report: Dict[str, Any]) -> Dict[str, Any]:
    """The report without its timing fields, for determinism comparisons."""
    return {k: v for k, v in report.items() if k != "timing"}


def _json_default(obj: Any) -> Any:
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(parent):
        raise IoFailureError(f"Output directory does not exist: {parent}")


def write_json(report: Dict[str, Any], path: str) -> None:
    _ensure_parent(path)
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(report, f, indent=2, default=_json_default)
            f.write("\n")
    except OSError as e:
        raise IoFailureError(f"Could not write {path}: {e}")
    logger.debug(f"Wrote report to {path}")


def write_csv(rows: Sequence[Tuple[float, float]], path: str, header: str = "x,F(x)") -> None:
    """Two-column CSV of (x, value) rows."""
    _ensure_parent(path)
    data = np.asarray(rows, dtype=np.float64).reshape(-1, 2)
    try:
        np.savetxt(path, data, delimiter=",", header=header, comments="", fmt="%.12g", encoding="utf-8")
    except OSError as e:
        raise IoFailureError(f"Could not write {path}: {e}")
    logger.debug(f"Wrote {len(data)} rows to {path}")


def summary_lines(results: Sequence[SuiteResult]) -> List[str]:
    """One line per suite, then one line per failing check."""
    lines = []
    for r in results:
        mark = "PASS" if r.passed else ("ERROR" if r.error else "FAIL")
        lines.append(f"{mark:5} {r.name:18} {len(r.checks):4} checks  {format_duration(r.elapsed)}")
        if r.error:
            lines.append(f"      {r.error.get('error_code')}: {truncate_text(r.error.get('error', ''), 120)}")
        for c in r.checks:
            if not c.passed:
                lines.append(f"      failed: {c.name} witness={truncate_text(json.dumps(c.witness, default=_json_default), 120)}")
    return lines
