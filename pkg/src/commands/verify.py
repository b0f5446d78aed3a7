# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Handler for `pmmeas verify`."""

import json
import time
from argparse import Namespace
from typing import List, Optional

from ..config import Config
from ..logger import logger
from ..runner import SuiteRunner
from ..views import build_report, summary_lines, write_json


def parse_suite_list(text: Optional[str]) -> Optional[List[str]]:
    """'a,b' -> ['a', 'b']; '' -> []; None -> None (keep the configured list)."""
    if text is None:
        return None
    return [s.strip() for s in text.split(",") if s.strip()]


def handle_verify(args: Namespace, config: Config) -> int:
    """
    Run the selected suites and write the JSON report.

    Returns the exit code: 0 when every suite passed, 1 otherwise.
    """
    suite_config = config.suite.with_overrides(
        seed=getattr(args, "seed", None),
        tolerance=getattr(args, "tol", None),
        suites=parse_suite_list(getattr(args, "suite", None)),
        threads=getattr(args, "threads", None),
    )

    started = time.perf_counter()
    results = SuiteRunner(suite_config).run()
    report = build_report(suite_config, results, time.perf_counter() - started)

    for line in summary_lines(results):
        logger.info(line)

    out = getattr(args, "out", None)
    if out == "-":
        print(json.dumps(report, indent=2, default=str))
    elif out:
        write_json(report, out)
        logger.ok(f"Report written to {out}")

    return 0 if report["passed"] else 1
